from hypothesis import HealthCheck, settings

# Graph classification inside property bodies can be slow per example;
# the suite favors fewer, meatier examples over wall-clock noise.
settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
