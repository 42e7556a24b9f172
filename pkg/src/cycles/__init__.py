# Cycle packing package
