"""Finitely presented groups: words, coset enumeration, small finite groups."""

from .cosets import (COMPLETE, OVERFLOW, CosetTable, IncompleteTableError, coset_enumerate,
                     default_limit, group_order)
from .library import (build_vankampen_presentation, d14_x_c3_images, dihedral_images, lookup,
                      presentation_d14_x_c3, presentation_G, presentation_G2)
from .multable import (EPIMORPHISM, HOM, NOT_HOM, MulTable, cyclic_table, d14_x_c3,
                       dihedral_table, direct_product, find_isomorphism, identify_small_group,
                       isomorphism_check, table_from_cosets, verify_homomorphism)
from .presentation import Presentation, abelianization, parse_presentation
from .words import Word, format_word, parse_word

__all__ = [
    "COMPLETE", "OVERFLOW", "CosetTable", "IncompleteTableError", "coset_enumerate",
    "default_limit", "group_order", "build_vankampen_presentation", "d14_x_c3_images",
    "dihedral_images", "lookup", "presentation_d14_x_c3", "presentation_G", "presentation_G2",
    "EPIMORPHISM", "HOM", "NOT_HOM", "MulTable", "cyclic_table", "d14_x_c3", "dihedral_table",
    "direct_product", "find_isomorphism", "identify_small_group", "isomorphism_check",
    "table_from_cosets", "verify_homomorphism", "Presentation", "abelianization",
    "parse_presentation", "Word", "format_word", "parse_word",
]
