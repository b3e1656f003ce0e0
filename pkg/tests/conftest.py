from hypothesis import HealthCheck, settings

# Catalog profiling is memoized per process; the first hypothesis example
# that touches it pays the whole cost, so disable the deadline.
settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")
