from posknot.cli import main

main()
