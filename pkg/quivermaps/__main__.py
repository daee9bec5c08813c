from quivermaps.cli import main

raise SystemExit(main())
