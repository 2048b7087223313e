# ~/epframe/epframe/validation_tests/counterexamples.py
#
# =============================================================================
# counterexamples.py
#
# created 18 October 2026
# modified
#
# =============================================================================

import logging

import sciunit
from sciunit.errors import ObservationError
from sciunit.scores import BooleanScore

from epframe.capabilities import ProducesInstance
from epframe.labeling import PathSpec, SpecError
from epframe.oracle import Budget, max_disjoint, min_hitting_set

_logger = logging.getLogger("epframe.validation_tests.counterexamples")

RELATIONS = {"eq": lambda a, b: a == b, "ge": lambda a, b: a >= b, "le": lambda a, b: a <= b}


def _validate(observation, extra):
    if not isinstance(observation, dict) or "spec" not in observation or "value" not in observation:
        raise ObservationError(
                "Observation must be of the form "
                "{'spec': PathSpec or str, 'value': int, 'relation': 'eq'|'ge'|'le', "
                + extra + ", 'budget': Budget (optional)}")
    if isinstance(observation["spec"], str):
        try:
            observation["spec"] = PathSpec.parse(observation["spec"], observation.get("mode", "vertex"))
        except SpecError as err:
            raise ObservationError(str(err))
    observation.setdefault("relation", "eq")
    if observation["relation"] not in RELATIONS:
        raise ObservationError("relation must be one of eq, ge, le")
    observation.setdefault("budget", Budget())
    return observation


def _describe(name, observation, prediction, passed):
    return "{} {} {} {}: {}".format(name, prediction, observation["relation"], observation["value"],
                                    "pass" if passed else "fail")


class PackingNumberTest(sciunit.Test):
    """This test compares the oracle's maximum number of disjoint target paths on a generated instance against an expected value.

    The observation holds the path *spec* (a :py:class:`~epframe.labeling.PathSpec` or its text form, with an optional *mode* for the latter), the expected *value*, a *relation* (``eq``, ``ge`` or ``le``), and optionally *limit* and *budget*. The prediction is the packing number, capped at *limit*.

    **How to use:**

    ::

       from epframe.validation_tests import PackingNumberTest
       test = PackingNumberTest({"spec": "long:4", "value": 1})
       s = test.judge(FamilyModel("long-lb", k=2, ell=4), deep_error=True)

    """
    required_capabilities = (ProducesInstance,)
    score_type = BooleanScore

    def __init__(self, observation, name=None, **params):
        # validated here and again by sciunit when judging
        sciunit.Test.__init__(self, self.validate_observation(observation), name=name, **params)

    def validate_observation(self, observation):
        observation = _validate(observation, "'limit': int (optional)")
        observation.setdefault("limit", None)
        return observation

    def generate_prediction(self, model, verbose=False):
        instance = model.produce_instance()
        size, _ = max_disjoint(instance.graph, instance.A, instance.B, instance.labeling,
                               self.observation["spec"], limit=self.observation["limit"],
                               budget=self.observation["budget"])
        return size

    def compute_score(self, observation, prediction, verbose=False):
        passed = RELATIONS[observation["relation"]](prediction, observation["value"])
        score = BooleanScore(passed)
        score.description = _describe("packing number", observation, prediction, passed)
        return score


class HittingNumberTest(sciunit.Test):
    """This test compares the oracle's minimum hitting set size on a generated instance against an expected value.

    Besides the fields of :py:class:`.PackingNumberTest` the observation takes *mode* (``vertex`` or ``edge`` hitting sets) and an optional *cap*. When no hitting set of size at most *cap* exists the prediction is ``cap + 1``, a lower bound, and only the ``ge`` relation can pass on it.

    """
    required_capabilities = (ProducesInstance,)
    score_type = BooleanScore

    def __init__(self, observation, name=None, **params):
        # validated here and again by sciunit when judging
        sciunit.Test.__init__(self, self.validate_observation(observation), name=name, **params)

    def validate_observation(self, observation):
        observation = _validate(observation, "'mode': 'vertex'|'edge', 'cap': int (optional)")
        observation.setdefault("mode", "vertex")
        if observation["mode"] not in ("vertex", "edge"):
            raise ObservationError("mode must be vertex or edge")
        observation.setdefault("cap", None)
        return observation

    def generate_prediction(self, model, verbose=False):
        instance = model.produce_instance()
        found = min_hitting_set(instance.graph, instance.A, instance.B, instance.labeling,
                                self.observation["spec"], mode=self.observation["mode"],
                                cap=self.observation["cap"], budget=self.observation["budget"])
        if found is None:
            return {"value": self.observation["cap"] + 1, "exact": False}
        return {"value": len(found), "exact": True}

    def compute_score(self, observation, prediction, verbose=False):
        value = prediction["value"]
        if prediction["exact"]:
            passed = RELATIONS[observation["relation"]](value, observation["value"])
        else:
            passed = observation["relation"] == "ge" and value >= observation["value"]
        score = BooleanScore(passed)
        shown = value if prediction["exact"] else ">= {}".format(value)
        score.description = _describe("hitting number", observation, shown, passed)
        return score
