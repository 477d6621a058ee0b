# When does a quotient of a regular embedding stay regular?
#
# The machine-checkable criterion: the inertia group must act trivially on
# the normal-bundle fiber (every generator pairs integrally with every
# normal weight).  Two contrasting order-2 examples, then the moment-fiber
# situation where the normal directions are torus-invariant by construction.

from hypertoric import (
    LocalModelSRE,
    WeightMatrix,
    hypertoric_model,
    hypertoric_normal_data,
    sre_condition_iii,
)

# Negation action on the plane: the quotient is the quadric cone and the
# origin is NOT a strong regular embedding (normal weights both -1).
cone = LocalModelSRE.cyclic(2, [-1, -1])
print("negation action, normal weights (-1,-1):", sre_condition_iii(cone))

# Cutting the invariant coordinate instead: weight even, condition holds.
axis = LocalModelSRE.cyclic(2, [2])
print("invariant cut, normal weight (2):       ", sre_condition_iii(axis))

# Moment-fiber embeddings: the d moment equations carry the trivial
# character, so the condition holds at every inertia element.
model = hypertoric_model(WeightMatrix.from_rows([[1, 2]]), [1])
data = hypertoric_normal_data(model)
print("moment fiber of P(1,2) cotangent model: ", sre_condition_iii(data))
print("  generators checked:", [str(g) for g in data.generators])
print("  normal weights:", list(data.normal_weights))
