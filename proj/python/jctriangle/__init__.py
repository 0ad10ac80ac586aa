"""Gain/loss photonic trimer: closed-form spectra, exceptional-point geometry,
perturbative response, and quench dynamics."""

try:
    from ._jctriangle import *  # noqa: F401,F403  (installed wheel layout)
    from ._jctriangle import __version__  # noqa: F401
except ImportError:  # in-tree build: module sits next to the package on sys.path
    from _jctriangle import *  # noqa: F401,F403
    from _jctriangle import __version__  # noqa: F401
