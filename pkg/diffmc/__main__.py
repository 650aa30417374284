from __future__ import annotations

from diffmc.main import main

if __name__ == "__main__":
    main()
