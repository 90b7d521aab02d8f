# SimpleGroupId.kind values
KIND_CYCLIC = "cyclic"
KIND_ALTERNATING = "alternating"
KIND_SPORADIC = "sporadic"
KIND_LIE = "lie"
