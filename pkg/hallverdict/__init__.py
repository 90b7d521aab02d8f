"""decide D_X / D_pi membership of finite groups from their composition factors"""

__version__ = "1.0.0"
