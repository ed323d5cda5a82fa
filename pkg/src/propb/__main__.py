from propb.cli import main

main()
