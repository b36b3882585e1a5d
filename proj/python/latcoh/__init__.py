"""0-dimensional lattice cohomology for negative-definite plumbing graphs."""

try:
    from ._latcoh import *  # noqa: F401,F403
    from ._latcoh import __doc__  # noqa: F401
except ImportError:  # flat layout (module next to the package on sys.path)
    from _latcoh import *  # noqa: F401,F403


def load_graph(path):
    """Parse a graph file in either the text or the JSON format."""
    with open(path) as f:
        return parse_graph(f.read())  # noqa: F405
