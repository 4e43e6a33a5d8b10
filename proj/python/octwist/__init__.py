try:
    from ._octwist import *  # noqa: F401,F403
except ImportError:  # running against a build tree where the module is flat
    from _octwist import *  # noqa: F401,F403
