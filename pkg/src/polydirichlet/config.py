"""Shared configuration constants."""

# Seed for every randomized-but-reproducible search (equal-degree splitting,
# witness hunting, sampling). CLI and library default to the same constant so
# outputs are byte-identical across runs.
DEFAULT_SEED = 2026

# Largest group order any constructor will materialize.
GROUP_ORDER_GUARD = 5000

# Group axioms are verified exhaustively at construction up to this order.
AXIOM_CHECK_LIMIT = 2000

# Degree bound for full permutation-group closure.
CLOSURE_DEGREE_GUARD = 12

# Candidate-assignment budget for homomorphism searches.
HOM_SEARCH_BUDGET = 10**7
