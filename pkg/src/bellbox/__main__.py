from bellbox.cli import main

main()
