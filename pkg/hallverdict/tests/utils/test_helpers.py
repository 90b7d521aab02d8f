import json
import os
from unittest.mock import patch

import django
import pytest

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hallverdict.settings")
django.setup()

from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.utils.helpers import dump_json, load_seed, parse_pi
from hallverdict.utils.errors import InvalidInput


def test_dump_json():
    """verifies sorted keys, fixed indentation and the trailing newline"""
    text = dump_json({"b": 1, "a": [2, 3]})
    assert text == '{\n  "a": [\n    2,\n    3\n  ],\n  "b": 1\n}\n'
    assert dump_json({"a": [2, 3], "b": 1}) == text


def test_parse_pi_finite():
    """verifies --pi"""
    assert parse_pi("3, 2") == PrimeSet.finite([2, 3])


def test_parse_pi_cofinite():
    """verifies --cofinite-pi with and without the prefix"""
    assert parse_pi(None, "excluded:7,11") == PrimeSet.excluding([7, 11])
    assert parse_pi(None, "7,11") == PrimeSet.excluding([7, 11])


def test_parse_pi_exactly_one():
    """verifies that exactly one of the two options is given"""
    with pytest.raises(InvalidInput):
        parse_pi()
    with pytest.raises(InvalidInput):
        parse_pi("2,3", "7")


@pytest.mark.parametrize("text", ["2,4", "2,x", "1"])
def test_parse_pi_invalid(text):
    """verifies InvalidInput on entries that are not primes"""
    with pytest.raises(InvalidInput):
        parse_pi(text)


def test_load_seed_filters_model(tmp_path, settings):
    """verifies that load_seed returns the fields of one model ordered by pk"""
    rows = [
        {"model": "hallverdict.Row", "pk": 2, "fields": {"name": "second"}},
        {"model": "hallverdict.Other", "pk": 1, "fields": {"name": "other"}},
        {"model": "hallverdict.Row", "pk": 1, "fields": {"name": "first"}},
    ]
    (tmp_path / "rows.json").write_text(json.dumps(rows), encoding="utf-8")
    settings.SEED_DIR = tmp_path
    assert load_seed("rows.json", "hallverdict.Row") == [{"name": "first"}, {"name": "second"}]


def test_load_seed_missing(tmp_path, settings):
    """verifies InvalidInput for a missing seed file"""
    settings.SEED_DIR = tmp_path
    with pytest.raises(InvalidInput):
        load_seed("missing.json", "hallverdict.Row")


# ================================================================================================
def test_primeset_membership():
    """verifies membership in finite and cofinite sets"""
    finite = PrimeSet.finite([5, 2])
    assert finite.primes == (2, 5)
    assert 2 in finite and 3 not in finite
    cofinite = PrimeSet.excluding([3])
    assert 2 in cofinite and 3 not in cofinite
    assert cofinite.intersect([2, 3, 5]) == [2, 5]
    assert str(cofinite) == "excluded:3"
    with pytest.raises(InvalidInput):
        cofinite.as_set()


def test_custom_logger_subject():
    """verifies that the label of a local `group` is logged as the subject"""
    from hallverdict.utils.custom_logger import CustomLogger

    class Labelled:
        label = "Alt(5)"

    custom_logger = CustomLogger("hallverdict.tests")

    def evaluate_factor():
        group = Labelled()  # noqa: F841
        custom_logger.info("evaluating %s", "factor")

    with patch.object(custom_logger.logger, "log") as log:
        evaluate_factor()
    log.assert_called_once()
    extra = log.call_args.kwargs["extra"]
    assert extra == {"caller_name": "evaluate_factor", "subject": "Alt(5)"}


def test_custom_logger_without_subject():
    """verifies an empty subject when no `group` is in scope"""
    from hallverdict.utils.custom_logger import CustomLogger

    custom_logger = CustomLogger("hallverdict.tests")
    with patch.object(custom_logger.logger, "log") as log:
        custom_logger.warning("nothing to see")
    assert log.call_args.kwargs["extra"]["subject"] == ""


def test_custom_logger_keeps_configured_level():
    """verifies that creating a CustomLogger leaves the level set by setup_logger alone"""
    import logging

    from hallverdict.utils.custom_logger import CustomLogger

    configured = logging.getLogger("hallverdict")
    previous = configured.level
    configured.setLevel(logging.DEBUG)
    try:
        custom_logger = CustomLogger("hallverdict")
        assert configured.level == logging.DEBUG
        with patch.object(custom_logger.logger, "log") as log:
            custom_logger.debug("realizations of %s", "Alt(8)")
        log.assert_called_once()
        assert log.call_args.args[0] == logging.DEBUG
    finally:
        configured.setLevel(previous)
