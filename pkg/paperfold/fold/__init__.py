from .folder import Folder
from .recursive import RecursiveFolding
from .substitutive import SubstitutionFolding

__all__ = ["Folder", "RecursiveFolding", "SubstitutionFolding"]
