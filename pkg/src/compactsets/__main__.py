from .plot_cli import main

raise SystemExit(main())
