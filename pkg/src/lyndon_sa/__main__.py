from __future__ import annotations

from lyndon_sa.cli import main

if __name__ == "__main__":
    main()
