"""
Constructor - quota plans and verified minimum-weight labelings for p >= m+n
"""
from modules.constructor.construct import construct
from modules.constructor.models.quota_plan import QuotaPlan, VertexClass
from modules.constructor.plans import derive_forced, quota_plan
from modules.constructor.realize import realize
