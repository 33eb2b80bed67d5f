__all__ = ["core", "experiments", "interactions", "io", "sampling", "sat", "tools"]

__version__ = "0.1.0"
