# Menger engine package
