# Openly disjoint cycles toolkit
