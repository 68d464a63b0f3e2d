"""
Run Configuration

Handles the validated parameters of one CLI computation and the fixed set of
golden regression cases.
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Tuple

from center import CONJECTURED, SIGN_CONVENTIONS
from colimit import NEGATIVE, P_SIGNS, POSITIVE
from core.errors import InvalidConfigError

SUBCOMMANDS = ('s2d2', 'unlink', 'dp', 'cp2', 'center')
FORMATS = ('json', 'csv', 'table')


@dataclass(frozen=True)
class RunConfig:
    """
    Parameters of one computation.

    Features:
    - s2d2 / unlink: N, alpha, q_max (lowest degree reported is −q_max), r_max for the oracle
    - dp / cp2: p_sign, n_max, j_min, j_max, sign_convention
    - center: n
    - oracle runs the independent route and records agreement
    """
    subcommand: str
    N: int = 2
    alpha: Tuple[int, ...] = (0,)
    q_max: int = 6
    r_max: Optional[int] = None
    local_unlink: int = 0
    p_sign: str = NEGATIVE
    n_max: int = 4
    j_min: int = -8
    j_max: int = 0
    sign_convention: str = CONJECTURED
    n: int = 2
    output_format: str = 'json'
    oracle: bool = False
    allow_unstable: bool = False
    progress: bool = False

    def __post_init__(self):
        errors = []
        if self.subcommand not in SUBCOMMANDS:
            errors.append(f"unknown subcommand {self.subcommand!r}")
        if self.output_format not in FORMATS:
            errors.append(f"format must be one of {FORMATS}, got {self.output_format!r}")
        if self.N < 1:
            errors.append(f"N must be at least 1, got {self.N}")
        for name in ('q_max', 'local_unlink', 'n_max', 'n'):
            if getattr(self, name) < 0:
                errors.append(f"{name} must be nonnegative, got {getattr(self, name)}")
        if self.r_max is not None and self.r_max < 0:
            errors.append(f"r_max must be nonnegative, got {self.r_max}")
        if not self.alpha:
            errors.append("at least one alpha is required")
        if self.subcommand == 's2d2' and len(self.alpha) != 1:
            errors.append("s2d2 takes a single alpha; use unlink for several components")
        if self.p_sign not in P_SIGNS:
            errors.append(f"p_sign must be one of {P_SIGNS}, got {self.p_sign!r}")
        if self.sign_convention not in SIGN_CONVENTIONS:
            errors.append(f"sign convention must be one of {SIGN_CONVENTIONS}")
        if self.j_min > self.j_max:
            errors.append(f"j_min {self.j_min} exceeds j_max {self.j_max}")
        if errors:
            raise InvalidConfigError('; '.join(errors), {'errors': errors})

    @property
    def depth(self) -> int:
        """Partition depth: degrees 0, −2, ..., −2·depth are reported."""
        return self.q_max // 2

    @property
    def q_min(self) -> int:
        return -2 * self.depth

    def parameters(self) -> Dict[str, Any]:
        """Parameters relevant to the subcommand, for the report."""
        keys = {
            's2d2': ('N', 'alpha', 'q_max', 'r_max', 'local_unlink', 'oracle'),
            'unlink': ('N', 'alpha', 'q_max', 'r_max', 'oracle'),
            'dp': ('p_sign', 'n_max', 'j_min', 'j_max', 'sign_convention', 'oracle'),
            'cp2': ('p_sign', 'n_max', 'j_min', 'j_max', 'sign_convention', 'oracle'),
            'center': ('n', 'oracle'),
        }[self.subcommand]
        values = asdict(self)
        out = {k: values[k] for k in keys}
        if 'alpha' in out:
            out['alpha'] = list(out['alpha'])
        return out


def golden_configs() -> Dict[str, RunConfig]:
    """The regression cases kept under the golden directory."""
    return {
        's2d2_N2_q6': RunConfig('s2d2', N=2, alpha=(0,), q_max=6),
        's2d2_N3_q8': RunConfig('s2d2', N=3, alpha=(1,), q_max=8),
        'unlink_N2_two': RunConfig('unlink', N=2, alpha=(0, 0), q_max=4, oracle=True),
        'dp_negative_n3': RunConfig('dp', p_sign=NEGATIVE, n_max=3, j_min=-6),
        'dp_positive_n4': RunConfig('dp', p_sign=POSITIVE, n_max=4, j_min=-8),
        'center_n2': RunConfig('center', n=2),
        'center_n4': RunConfig('center', n=4),
    }
