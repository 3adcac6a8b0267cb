from .continuity_mode_choices import Continuity_Mode_Choices
from .experiment_choices import Experiment_Choices
from .index_method_choices import Index_Method_Choices
from .provenance_choices import Provenance_Choices
