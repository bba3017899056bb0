"""Exact computational toolkit for ramified partition monoids and tied algebras.

Modules
-------
laurent         exact Laurent-polynomial coefficients and exact/probabilistic rank
perms           permutations in one-line notation, reduced words, Young subgroups
combinatorics   compositions, partitions, tableaux, Bell/Catalan-type counts
setpartitions   set partitions under refinement, joins, Mobius functions
diagrams        partition/Brauer/Jones diagram monoids and boxed elements
ramified        ramified partitions, boxed ramified monoids, normal forms, centers
algebras        Hecke, Temperley-Lieb, tied and tied-boxed algebras over Z[q,q^-1]
tensorrep       tensor-space matrix representations used as independent oracles
cellular        Murphy-type cellular bases and cellular-axiom verification
presentations   finite monoid presentations with Knuth-Bendix verification
checks          the full verification suite as reusable record-producing functions
cli             command-line harness
"""

__version__ = "0.1.0"
