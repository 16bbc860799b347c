from .closed_form import *
from .optimizer import *
from .negative_uniform import *
from .distance import *
