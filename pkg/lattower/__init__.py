"""Normal subgroup lattices of tower groups and their lattice-automorphism towers"""
