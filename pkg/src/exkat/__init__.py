"""exkat: exact computations in finite triangulated categories.

The package represents a finite Krull-Schmidt triangulated category by
tables (Hom dimensions, composition structure constants, suspension,
a registry of distinguished triangles), generates such tables for
cluster categories of type A via the polygon model, computes relative
extriangulated structures and their Grothendieck groups, and machine
checks index isomorphisms, additivity with error term and exact
sequences on these instances.
"""

__version__ = "0.1.0"
