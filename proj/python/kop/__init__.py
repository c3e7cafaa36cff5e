try:
    from ._kop import *  # noqa: F401,F403
except ImportError:  # in-tree test layout: extension sits on PYTHONPATH
    from _kop import *  # noqa: F401,F403
