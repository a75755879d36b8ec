from hypothesis import HealthCheck, settings

# derandomized so the whole suite replays identically, matching the
# package's own reproducibility contract
settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
