"""Min-max regret Steiner trees over interval edge costs."""

from ._mmrstp import *  # noqa: F401,F403
