import hypothesis
import hypothesis.strategies as st

from maro import GenConfig, generate

hypothesis.settings.register_profile("suite", max_examples=60, deadline=None)
hypothesis.settings.load_profile("suite")


def int_vecs(n=2, lo=0, hi=12):
    return st.tuples(*[st.integers(lo, hi) for _ in range(n)]).map(
        lambda t: tuple(float(c) for c in t)
    )


def point_sets(n=2, max_size=6):
    return st.lists(int_vecs(n), min_size=1, max_size=max_size).map(
        lambda pts: tuple(dict.fromkeys(pts))
    )


def weights(n=2):
    # strictly positive integer masses, normalized
    return st.tuples(*[st.integers(1, 5) for _ in range(n)]).map(
        lambda t: tuple(c / sum(t) for c in t)
    )


gen_configs = st.builds(
    GenConfig,
    seed=st.integers(0, 2**32 - 1),
    n=st.integers(2, 3),
    nx=st.integers(2, 5),
    nu=st.integers(1, 3),
    ny=st.integers(1, 5),
)

instances = gen_configs.map(generate)

singleton_instances = st.builds(
    GenConfig,
    seed=st.integers(0, 2**32 - 1),
    n=st.just(2),
    nx=st.integers(2, 5),
    nu=st.integers(1, 3),
    ny=st.just(1),
).map(generate)
