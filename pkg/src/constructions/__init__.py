# Digraph constructions package
