# Directed tree-width certificates package
