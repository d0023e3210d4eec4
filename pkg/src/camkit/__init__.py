"""Chart accessibility toolkit.

Turns raw chart data into screen-reader-ready summaries, audits UI
view-hierarchy dumps for inaccessible charts, scores audits against
labeled corpora, and simulates the transcript a screen-reader would
produce for a screen.
"""

from .audit import (
    AccessibilityStatus,
    AggregateStats,
    ChartCandidate,
    CorpusLabel,
    EvalMetrics,
    LabelsError,
    PairingError,
    ScreenAudit,
    accessibility_agreement,
    aggregate_stats,
    audit_screen,
    build_report,
    evaluate_corpus,
    is_chart_candidate,
    is_node_accessible,
    load_labels_csv,
    nearby_text_description,
)
from .chartdata import ChartDataError, load_chart_file, load_registry_file
from .descriptors import (
    BarChartDescriptor,
    CategoricalSeries,
    PieChartDescriptor,
    ProportionSeries,
    RainfallColumnDescriptor,
    RainfallSeries,
    StockLineDescriptor,
    TimeSeries,
    day_label,
    describe_bar,
    describe_pie,
    describe_rainfall,
    describe_stock,
    order_and_group,
    rain_phrase,
    timestamp_label,
)
from .hierarchy import (
    Bounds,
    DumpError,
    DumpParseError,
    DumpStructureError,
    UiNode,
    parse_bounds,
    parse_dump,
    parse_dump_file,
    to_canonical_xml,
    walk,
)
from .phrasing import (
    Descriptor,
    DescriptorConfig,
    PlaceholderDescriptor,
    Trend,
    beaufort_phrase,
    detect_trend,
    format_value,
    join_list,
    phrase_proportion,
)
from .simulator import (
    DescriptorRegistry,
    Utterance,
    UtteranceSource,
    simulate,
    traversal_order,
    utterance_for,
)

__version__ = "0.1.0"
