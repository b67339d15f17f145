from mdtrees.cli import run

run()
