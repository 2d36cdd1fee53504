from subchord.cli import main

main()
