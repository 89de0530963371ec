"""Fusion rings from their fusion matrices.

A fusion ring of rank m is presented by m nonnegative integer matrices:
matrix i holds the structure constants N[i,k,s] of x_i x_k = sum_s N x_s.
Matrix 1 is the identity, and the duality involution is read off the
unit column.  This walkthrough builds the FPdim-60 ring of PSL(2,5),
checks the axioms, and inspects its Frobenius-Perron data.
"""

import numpy as np

from fusionforge import corpus, rings

# The corpus bundles every ring printed in the source material; entries
# are addressable by id or alias.
entry = corpus.get("psl25")
fd = entry.fd
print("ring:", entry.id, "aliases:", entry.aliases)
print("fusion matrix of x_2:")
print(np.asarray(fd.tensor[1]))

# Axioms: unit, duality, Frobenius reciprocity, associativity, nonnegativity.
report = rings.verify_axioms(fd)
print("\naxioms:", report.summary())

# Frobenius-Perron dimensions: the common Perron eigenvector of the
# fusion matrices.  FPdim is the sum of their squares.
d = rings.fp_dimensions(fd)
print("\nFP dimensions:", np.round(d, 9))
print("FPdim:", rings.global_fpdim(fd))
print("type:", rings.type_signature(fd))

# Structural predicates.
print("\nsimple:", rings.is_simple(fd))
print("perfect:", rings.is_perfect(fd))
print("Frobenius type:", rings.is_frobenius_type(fd))
print("commutative:", rings.is_commutative(fd))

# Subring closure: the smallest basis subset containing the generators
# that is closed under duality and fusion.  Simple rings close to
# everything from any single non-unit generator.
print("\nclosure of {x_2}:", sorted(j + 1 for j in rings.subring_closure(fd, [1])))

# A non-simple contrast: Z/4 has the subgroup {e, g^2}.
z4 = rings.cyclic_group_ring(4)
print("Z/4 proper subrings:",
      [sorted(j + 1 for j in S) for S in rings.proper_subrings(z4)])

# The four unconditional bounds on the structure constants hold on any
# genuine fusion ring; the report carries the tightest slack of each.
bounds = rings.coefficient_bounds_report(fd)
print("\ncoefficient bounds hold:", bounds.all_hold)
print("tightest min-dim slack:", bounds.min_dim)
