import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from stablecore.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    """Random labeled graph drawn as an edge mask over all vertex pairs."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return Graph(n, edges)
