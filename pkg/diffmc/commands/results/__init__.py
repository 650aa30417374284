"""Models for rendering results of commands.

Each command module with results of its own defines their models in the
module of the same name in this package, i.e. `diffmc.commands.game`
defines its result models in `diffmc.commands.results.game`.
Results of library pipelines (verdicts, relations, censuses, suites)
are rendered with the library's own models.
"""
