try:
    from ._soficheck import *  # noqa: F401,F403
except ImportError:
    from _soficheck import *  # noqa: F401,F403
