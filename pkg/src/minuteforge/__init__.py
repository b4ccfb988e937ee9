"""minuteforge: unsupervised extractive meeting minuting and ROUGE evaluation."""

__version__ = "0.1.0"
