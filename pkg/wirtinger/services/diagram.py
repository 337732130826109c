# wirtinger/services/diagram.py
import logging
from typing import Optional, Sequence

from wirtinger.core.config import settings
from wirtinger.core.exceptions import PropertyViolation
from wirtinger.models.diagram import Diagram
from wirtinger.schemas.diagram import BoundsResponse, DictionaryResponse, OmegaResponse, VerifyResponse
from wirtinger.schemas.search import BoundedResult, SearchOptions
from wirtinger.services.bounds import twist_regions, twist_seeding, volume_lower_bound
from wirtinger.services.codec import diagram_from_text, emit_gauss, resolve_strands, strand_names
from wirtinger.services.coloring import extend_to_fixpoint, is_generating_system
from wirtinger.services.search import wirtinger_number
from wirtinger.services.verify import count_local_maxima, reconstruct_morse_profile, verify_coloring

logger = logging.getLogger(__name__)


class DiagramService:
    """Single-diagram queries shared by the CLI and the HTTP API."""

    def __init__(
        self,
        parallelism: Optional[int] = None,
        cutoff_k: Optional[int] = None,
        budget_ms: Optional[int] = None,
    ) -> None:
        self.options = SearchOptions(
            parallelism=parallelism or settings.JOBS,
            cutoff_k=cutoff_k if cutoff_k is not None else settings.CUTOFF_K,
            budget_ms=budget_ms if budget_ms is not None else settings.BUDGET_MS,
            chunk_size=settings.CHUNK_SIZE,
        )

    def dictionary(self, gauss: str) -> DictionaryResponse:
        d = diagram_from_text(gauss)
        names = strand_names(d)
        entries = {
            names[strand.id]: [
                strand_names(d, sorted(d.crossing(label).under)) for label in sorted(strand.over_at)
            ]
            for strand in d.strands
        }
        return DictionaryResponse(
            gauss=emit_gauss(d.code),
            strands=names,
            dictionary=entries,
            closed=strand_names(d, d.closed_strands),
        )

    def omega(self, gauss: str) -> OmegaResponse:
        d = diagram_from_text(gauss)
        return self._omega(d)

    def _omega(self, d: Diagram) -> OmegaResponse:
        result = wirtinger_number(d, self.options)
        response = OmegaResponse(
            gauss=emit_gauss(d.code),
            crossings=d.crossing_count,
            components=d.component_count,
            sets_tested=result.sets_tested,
            elapsed_ms=round(result.elapsed * 1000),
        )
        if isinstance(result, BoundedResult):
            response.exceeds = result.exceeds
            response.reason = result.reason
        else:
            response.omega = result.omega
            response.witness = strand_names(d, result.witness)
        return response

    def verify(self, gauss: str, seeds: Sequence[str]) -> VerifyResponse:
        """
        Color from the given seeds; on a complete coloring also run the
        property checks and, when they pass, rebuild the Morse profile.
        """
        d = diagram_from_text(gauss)
        res = extend_to_fixpoint(d, resolve_strands(d, seeds))
        colored = sorted(res.sequence.final_colors.items())
        response = VerifyResponse(
            complete=res.complete,
            order=strand_names(d, res.sequence.order),
            colors=dict(zip(strand_names(d, [sid for sid, _ in colored]), [color for _, color in colored])),
        )
        if not res.complete:
            return response

        response.report = verify_coloring(d, res)
        if response.report.ok:
            try:
                response.profile = reconstruct_morse_profile(d, res)
                response.local_maxima = count_local_maxima(response.profile)
            except PropertyViolation as exc:
                logger.warning("Profile rejected: %s", exc.detail)
        return response

    def bounds(self, gauss: str) -> BoundsResponse:
        """Twist regions, the 2t bound with its seeding, and C * beta for beta <= omega."""
        d = diagram_from_text(gauss)
        regions = twist_regions(d)
        seeding = sorted(twist_seeding(d, regions))
        bound = 2 * len(regions)

        result = wirtinger_number(d, self.options)
        beta_upper = bound if isinstance(result, BoundedResult) else result.omega
        return BoundsResponse(
            crossings=d.crossing_count,
            twist_regions=regions,
            twist_number=len(regions),
            bound_2t=bound,
            seeding=strand_names(d, seeding),
            seeding_generates=is_generating_system(d, seeding),
            volume=volume_lower_bound(beta_upper),
        )
