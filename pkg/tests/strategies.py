from hypothesis import strategies as st

from pyschouten.reference.sampling import random_expression, random_functional

# Expressions are drawn through the suite's sampler, seeded by hypothesis so that failures shrink
# and replay.
rngs = st.randoms(use_true_random=False)


def expressions(terms=3, odd_degree=None, max_order=2, labels=("x",), fields=1, atoms=True):
    return st.builds(lambda rng: random_expression(rng, terms, odd_degree, max_order, labels, fields, atoms), rngs)


def functionals(grading=1, terms=2, max_order=2, base="x", atoms=True):
    return st.builds(lambda rng: random_functional(rng, grading, terms, max_order, base, atoms), rngs)
