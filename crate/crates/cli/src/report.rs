//! Plain-text reports. Output depends only on the inputs.

use std::fmt::Write as _;

use piercing::counterexample::{EscapeTrace, UnpierceabilityCertificate};
use piercing::kernel::RadonPartition;
use piercing::pq::PqReport;
use piercing::reduction::ReductionReport;
use piercing::solver::PiercingResult;
use piercing::Family;

fn set(items: &[impl ToString]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn pq(f: &Family, rep: &PqReport) -> String {
    let mut out = String::new();
    writeln!(out, "family: {}", f.name).unwrap();
    writeln!(out, "regions: {}", f.len()).unwrap();
    writeln!(out, "p: {}", rep.p).unwrap();
    writeln!(out, "q: {}", rep.q).unwrap();
    writeln!(out, "holds: {}", rep.holds).unwrap();
    writeln!(out, "q-subsets checked: {}", rep.witness_table.len()).unwrap();
    if let Some(v) = &rep.violation {
        writeln!(out, "violation: {}", set(&v.labels)).unwrap();
        writeln!(out, "certificate:").unwrap();
        let idx: Vec<usize> = v.labels.iter().map(|l| f.index_of(l).unwrap()).collect();
        for (sub, w) in &rep.witness_table {
            if sub.iter().all(|i| idx.contains(i)) {
                let labels: Vec<&str> = sub.iter().map(|&i| f.regions()[i].label.as_str()).collect();
                let verdict = w.as_ref().map_or("empty".to_string(), |p| format!("meets at {p}"));
                writeln!(out, "  {}: {verdict}", set(&labels)).unwrap();
            }
        }
    }
    out
}

pub fn piercing(f: &Family, res: &PiercingResult) -> String {
    let mut out = String::new();
    writeln!(out, "family: {}", f.name).unwrap();
    writeln!(out, "regions: {}", f.len()).unwrap();
    writeln!(out, "tau: {}", res.tau).unwrap();
    writeln!(out, "optimal: {}", res.optimal).unwrap();
    writeln!(out, "helly shortcut: {}", res.helly).unwrap();
    writeln!(out, "explored nodes: {}", res.explored_nodes).unwrap();
    writeln!(out, "transversal:").unwrap();
    for p in &res.transversal {
        writeln!(out, "  {p}").unwrap();
    }
    out
}

pub fn escape(e: &EscapeTrace) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    let mut out = String::new();
    writeln!(out, "point: {}", e.point).unwrap();
    writeln!(out, "n0: {}", opt(e.n0.map(|v| v.to_string()))).unwrap();
    writeln!(out, "slope: {}", opt(e.slope_s.as_ref().map(|v| v.to_string()))).unwrap();
    writeln!(out, "m0: {}", opt(e.m0.map(|v| v.to_string()))).unwrap();
    writeln!(out, "proofBound: {}", e.proof_bound).unwrap();
    writeln!(out, "escapeIndex: {}", e.escape_index).unwrap();
    writeln!(out, "certifiedThrough: {}", e.certified_through).unwrap();
    out
}

pub fn certificate(cert: &UnpierceabilityCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "missed region: F{}", cert.index).unwrap();
    writeln!(out, "points: {}", cert.traces.len()).unwrap();
    for t in &cert.traces {
        writeln!(out, "  {} escapes from F{}", t.point, t.escape_index).unwrap();
    }
    out
}

pub fn radon(r: &RadonPartition) -> String {
    format!(
        "partA: {}\npartB: {}\ncommonPoint: {}\n",
        set(&r.part_a),
        set(&r.part_b),
        r.common_point
    )
}

pub fn reduction(rep: &ReductionReport) -> String {
    let mut out = String::new();
    writeln!(out, "A: {}", rep.a_label).unwrap();
    writeln!(out, "B: {}", rep.b_label).unwrap();
    writeln!(out, "F0:").unwrap();
    for h in &rep.f0.constraints {
        writeln!(out, "  {h}").unwrap();
    }
    writeln!(out, "every region meets F0: {}", rep.hull_meets.ok).unwrap();
    if let Some(l) = &rep.hull_meets.offending {
        writeln!(out, "  misses F0: {l}").unwrap();
    }
    if let Some(q) = &rep.hull_meets.violating_quadruple {
        writeln!(out, "  quadruple without intersecting triple: {}", set(q)).unwrap();
    }
    if !rep.hull_meets.ok {
        return out;
    }
    let relocated = rep.triples.iter().filter(|t| t.witness.as_ref() != Some(&t.q)).count();
    writeln!(out, "intersecting triples meet inside F0: {}", rep.triples_ok).unwrap();
    writeln!(out, "  triples: {} ({} moved into F0)", rep.triples.len(), relocated).unwrap();
    if let Some(t) = &rep.triples_offending {
        writeln!(out, "  offending triple: {}", set(t)).unwrap();
    }
    let Some(p) = &rep.piercing else {
        return out;
    };
    writeln!(out, "clipped regions bounded: {}", rep.clipped_all_bounded).unwrap();
    writeln!(out, "clipped (4,3)-property: {}", rep.clipped_pq_holds).unwrap();
    writeln!(out, "tau: {}", p.tau).unwrap();
    writeln!(out, "bound: {}", rep.bound).unwrap();
    writeln!(out, "boundSatisfied: {}", rep.bound_satisfied).unwrap();
    writeln!(out, "transversal pierces original: {}", rep.pierces_original).unwrap();
    writeln!(out, "transversal:").unwrap();
    for pt in &p.transversal {
        writeln!(out, "  {pt}").unwrap();
    }
    out
}
