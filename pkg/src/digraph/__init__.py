# Digraph core package
