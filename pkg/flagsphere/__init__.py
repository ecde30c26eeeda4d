from ._errors import *
from ._config import *
from ._graph import *
from ._cycles import *
from ._planarity import *
from ._canonical import *
from ._complex import *
from ._homology import *
from ._families import *
from ._polynomial import *
from ._vectors import *
from ._flip import *
from ._construct import *
from ._io import *
from ._report import *
from ._accept import *

__version__ = '0.1.0'
