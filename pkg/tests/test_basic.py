"""
Basic tests for the markedmcg package.
"""

import pytest


def test_package_import():
    """Test that the package can be imported."""
    import markedmcg

    assert hasattr(markedmcg, "__version__")
    assert markedmcg.__version__ == "0.1.0"


def test_constants_import():
    from markedmcg import constants

    assert constants.DEFAULT_RNG_SEED == 42
    assert constants.SAMPLE_COORDINATE_MIN == -20
    assert constants.SAMPLE_COORDINATE_MAX == 20


def test_check_result_line():
    from markedmcg.data_structures import CheckResult

    assert CheckResult("braid", "B3", True, "ok").format_line() == "PASS braid B3: ok"
    assert CheckResult("braid", "B3", False).format_line() == "FAIL braid B3"


def test_check_result_to_dict():
    from markedmcg.data_structures import CheckResult

    data = CheckResult("sphere", "n=4", True, "[6]", order=7).to_dict()
    assert data == {"suite": "sphere", "check": "n=4", "passed": True, "detail": "[6]"}


def test_shared_buffer_orders_results():
    from markedmcg.data_structures import CheckResult, SharedReportBuffer

    buffer = SharedReportBuffer()
    buffer.add_results([CheckResult("b", "second", True, "", order=2)])
    buffer.add_results([CheckResult("a", "first", True, "", order=1)])
    assert buffer.size() == 2
    assert [r.name for r in buffer.drain_results()] == ["first", "second"]
    assert buffer.size() == 0


def test_run_config_overrides():
    from markedmcg.data_structures import RunConfig

    config = RunConfig(command="verify", max_n=3, samples=1)
    overrides = config.overrides()
    assert overrides["max_n"] == 3
    assert overrides["samples"] == 1
    assert overrides["rng_seed"] is None


def test_get_logger_name():
    from markedmcg.logging_config import get_logger

    assert get_logger("markedmcg.cluster").name == "markedmcg.cluster"
    assert get_logger().name == "markedmcg"


def test_setup_logging_writes_to_stream():
    import io
    import logging

    from markedmcg.logging_config import get_logger, log_duration, setup_logging

    stream = io.StringIO()
    logger = setup_logging("debug", stream=stream)
    assert logger.level == logging.DEBUG
    get_logger("markedmcg.words").debug("hello")
    assert "markedmcg.words - DEBUG - hello" in stream.getvalue()

    with pytest.raises(RuntimeError):
        with log_duration(get_logger("timing"), "Step"):
            raise RuntimeError("stop")
    assert "Step took" in stream.getvalue()
    setup_logging("WARNING")
