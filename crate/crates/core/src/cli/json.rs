//! Machine-readable documents. Field names are part of the output contract.

use serde::Serialize;

use crate::davenport::DavenportResult;
use crate::eb::{CoincidenceRecord, ConstructionTrace, InvariantReport};
use crate::group::AbelianGroupView;
use crate::ring::FiniteRing;
use crate::sequence::Sequence;

#[derive(Serialize)]
struct IdealDoc<'a> {
    generators: &'a [String],
    size: usize,
    index: usize,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    ring: &'a str,
    order: usize,
    units_order: usize,
    unit_group: &'a [usize],
    davenport: usize,
    maximal_ideals: Vec<IdealDoc<'a>>,
    lower_bound: usize,
    #[serde(rename = "exact_I")]
    exact_i: Option<usize>,
    exact_is_formula_derived: bool,
    #[serde(rename = "ghw_upper")]
    upper_bound: usize,
    equality_case: &'static str,
    #[serde(rename = "witness_T")]
    witness_t: Option<&'a [String]>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

pub fn serialize_report(report: &InvariantReport) -> String {
    to_json(&ReportDoc {
        ring: &report.ring_label,
        order: report.ring_order,
        units_order: report.units_order,
        unit_group: &report.unit_group,
        davenport: report.davenport_of_units,
        maximal_ideals: report
            .maximal_ideals
            .iter()
            .map(|m| IdealDoc {
                generators: &m.generators,
                size: m.size,
                index: m.index,
            })
            .collect(),
        lower_bound: report.lower_bound,
        exact_i: report.exact_i,
        exact_is_formula_derived: report.exact_is_formula_derived,
        upper_bound: report.upper_bound,
        equality_case: report.equality_case.as_str(),
        witness_t: report.witness_t_names.as_deref(),
    })
}

fn names(ring: &FiniteRing, seq: &Sequence) -> Vec<String> {
    seq.terms().iter().map(|&t| ring.element_name(t)).collect()
}

fn element_names(ring: &FiniteRing, elems: &[usize]) -> Vec<String> {
    elems.iter().map(|&t| ring.element_name(t)).collect()
}

#[derive(Serialize)]
struct CertificateDoc {
    depth: usize,
    product: String,
    holds: bool,
}

#[derive(Serialize)]
struct StepDoc {
    generators: Vec<String>,
    index: usize,
    chosen: Vec<String>,
    lifted: Vec<String>,
    depth_certificates: Vec<CertificateDoc>,
}

#[derive(Serialize)]
struct TraceDoc<'a> {
    ring: &'a str,
    davenport: usize,
    davenport_witness: Vec<String>,
    maximal_ideals: Vec<StepDoc>,
    sequence: Vec<String>,
    length: usize,
    lower_bound: usize,
    verified: bool,
}

pub fn serialize_trace(ring: &FiniteRing, trace: &ConstructionTrace) -> String {
    to_json(&TraceDoc {
        ring: &trace.ring_label,
        davenport: trace.davenport_of_units,
        davenport_witness: names(ring, &trace.davenport_witness),
        maximal_ideals: trace
            .steps
            .iter()
            .map(|s| StepDoc {
                generators: s.maximal_ideal.generator_names(),
                index: s.index,
                chosen: element_names(ring, &s.chosen),
                lifted: element_names(ring, &s.lifted),
                depth_certificates: s
                    .depth_certificates
                    .iter()
                    .map(|c| CertificateDoc {
                        depth: c.depth,
                        product: ring.element_name(c.product),
                        holds: c.holds,
                    })
                    .collect(),
            })
            .collect(),
        sequence: names(ring, &trace.sequence),
        length: trace.sequence.len(),
        lower_bound: trace.lower_bound(),
        verified: trace.verified,
    })
}

#[derive(Serialize)]
struct DavenportDoc<'a> {
    group: &'a str,
    order: usize,
    invariant_factors: &'a [usize],
    davenport: usize,
    witness: Vec<String>,
    exhaustive: bool,
}

pub fn serialize_davenport(group: &AbelianGroupView, result: &DavenportResult) -> String {
    to_json(&DavenportDoc {
        group: group.label(),
        order: group.order(),
        invariant_factors: group.invariant_factors(),
        davenport: result.value,
        witness: result.witness.terms().iter().map(|&t| group.element_name(t)).collect(),
        exhaustive: result.exhaustive,
    })
}

#[derive(Serialize)]
struct ComponentDoc<'a> {
    factor: &'a str,
    multiplicity: usize,
    image_generators: &'a [String],
    index: usize,
}

#[derive(Serialize)]
struct CoincidenceDoc<'a> {
    ring: &'a str,
    components: Vec<ComponentDoc<'a>>,
    big_omega: usize,
    small_omega: usize,
    index_excess: usize,
    coincides: bool,
}

pub fn serialize_coincidence(record: &CoincidenceRecord) -> String {
    to_json(&CoincidenceDoc {
        ring: &record.ring_label,
        components: record
            .components
            .iter()
            .map(|c| ComponentDoc {
                factor: &c.factor,
                multiplicity: c.multiplicity,
                image_generators: &c.image_generators,
                index: c.index,
            })
            .collect(),
        big_omega: record.big_omega,
        small_omega: record.small_omega,
        index_excess: record.index_excess,
        coincides: record.coincides(),
    })
}
