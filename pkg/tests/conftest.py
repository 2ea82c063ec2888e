import time


def pytest_sessionstart(session):
    session.config._suite_started = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # run the acceptance gate last so its wall-clock criterion covers the
    # whole suite (sort is stable: relative order is otherwise preserved)
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")
