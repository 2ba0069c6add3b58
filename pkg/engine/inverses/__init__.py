"""Generalized inverses: equation classes, classic inverses, prescribed ideals and special families."""
