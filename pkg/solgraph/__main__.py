from solgraph.cli import main

main()
