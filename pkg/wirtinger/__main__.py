from wirtinger.cli import main

raise SystemExit(main())
