"""Term rewriting for computational paths: proof terms of propositional equality."""

from .engine import (
    DEFAULT_BUDGET, ConfluenceReport, StepRecord, Trace, check_local_confluence,
    check_rho_collapse, normal_form, normalize, one_step_reducts, rw_equal, step,
)
from .env import Environment, circle_env, coprod_env, nat_env, parse_env, sample_env, unit_env
from .errors import (
    BudgetExceeded, EmptyCode, EndpointMismatch, IllFormedResult, LooseTerm, NotCirclePath,
    NotCoprodPath, NotNatPath, PathError, PathSyntaxError, PreconditionViolated, UnknownAtom,
)
from .generate import random_loop, random_term
from .rules import MatchBinding, RewriteRule, apply, catalog, match_at_root, redexes, rule
from .syntax import parse_path, parse_point, print_path, print_point
from .terms import (
    App, Atom, Compose, Eta, Ext, Fst, Hom, Identity, Mu1, Mu2, MuE2, MuE3, MuF, Named, NatLit,
    Nu, Pair, PairMap, PairPath, Rho, Sigma, Snd, Star, SubL, SubR, Tau, Var, Xi, Xi1, Xi2,
    endpoints, well_formed,
)

__version__ = "0.1.0"
