# Density engine package
