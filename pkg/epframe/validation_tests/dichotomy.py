# ~/epframe/epframe/validation_tests/dichotomy.py
#
# =============================================================================
# dichotomy.py
#
# created 18 October 2026
# modified
#
# =============================================================================

import logging

import sciunit
from sciunit.errors import ObservationError
from sciunit.scores import BooleanScore

from epframe.capabilities import ProducesCertificate
from epframe.epsolve import VARIANTS
from epframe.oracle import Budget, Report, verify_certificate
from epframe.resultsManager import ResultsManager

_logger = logging.getLogger("epframe.validation_tests.dichotomy")


class DichotomyTest(sciunit.Test):
    """This test checks that a model answers an instance with a certificate that the oracle accepts.

    **Level-1**  :py:meth:`.validate_observation`

    The observation is a dictionary with the *instance* (a :py:class:`~epframe.gallery.Instance`), the *variant*, *k* and, for the long variant, *ell*. An optional *budget* (:py:class:`~epframe.oracle.Budget`) bounds the coverage check.

    **Level-2**  :py:meth:`.generate_prediction`

    The model's :py:meth:`produce_certificate` is called on the instance.

    **Level-3**  :py:meth:`.compute_score`

    The certificate is checked by :py:func:`~epframe.oracle.verify_certificate`. The score is a ``BooleanScore`` and its description is the report document, one line per violated clause.

    **How to use:**

    ::

       from epframe.validation_tests import DichotomyTest
       test = DichotomyTest({"instance": instance, "variant": "long", "k": 2, "ell": 4})
       s = test.judge(SolverModel("long", ell=4), deep_error=True)
       print(s.description)

    """
    required_capabilities = (ProducesCertificate,)
    score_type = BooleanScore

    def __init__(self, observation, name=None, **params):
        # validated here and again by sciunit when judging
        sciunit.Test.__init__(self, self.validate_observation(observation), name=name, **params)

    def validate_observation(self, observation):
        if ( not isinstance(observation, dict) or
             "instance" not in observation or
             "variant" not in observation or
             "k" not in observation ):
            raise ObservationError(
                    "Observation must be of the form "
                    "{'instance': Instance, 'variant': str, 'k': int, "
                    "'ell': int (long only), 'budget': Budget (optional)}")
        if observation["variant"] not in VARIANTS:
            raise ObservationError("unknown variant {!r}".format(observation["variant"]))
        if observation["k"] < 1:
            raise ObservationError("k must be >= 1")
        if (observation["variant"] == "long") != (observation.get("ell") is not None):
            raise ObservationError("ell is required exactly for the long variant")
        observation.setdefault("ell", None)
        observation.setdefault("budget", Budget())
        return observation

    def generate_prediction(self, model, verbose=False):
        instance = self.observation["instance"]
        return model.produce_certificate(instance, self.observation["k"])

    def compute_score(self, observation, prediction, verbose=False):
        instance = observation["instance"]
        mismatch = []
        if prediction.variant != observation["variant"]:
            mismatch.append("certificate variant {} should be {}"
                            .format(prediction.variant, observation["variant"]))
        if prediction.k != observation["k"]:
            mismatch.append("certificate k = {} should be {}".format(prediction.k, observation["k"]))
        if prediction.ell != observation["ell"]:
            mismatch.append("certificate ell = {} should be {}".format(prediction.ell, observation["ell"]))
        if mismatch:
            report = Report(violations=mismatch)
        else:
            report = verify_certificate(instance.graph, instance.A, instance.B, instance.labeling,
                                        prediction, observation["budget"])
        score = BooleanScore(report.passed)
        score.description = ResultsManager.report_document(report)
        _logger.info("%s k=%d: %s", observation["variant"], observation["k"],
                     "pass" if report.passed else "fail")
        return score
