//! Full structural analysis of one code, as printed by `qcldpc check`.

use std::fmt::{self, Write as _};

use qcldpc_core::analysis::{classical_info, ClassicalCodeInfo};
use qcldpc_core::{
    css_pair_check, eaqecc_params, min_distance_upper_bound, rank_bound, rank_bound_applies,
    CheckMatrix, CodeKind, CodeSpec, CssPairCheck, EaqeccParams, Rate,
};

use crate::error::Result;

/// Screen predicate next to the oracle it approximates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScreenResult {
    pub screen: bool,
    pub oracle: bool,
}

impl ScreenResult {
    pub fn agrees(&self) -> bool {
        self.screen == self.oracle
    }
}

/// Analysis of one check matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixReport {
    pub label: &'static str,
    pub info: ClassicalCodeInfo,
    /// `screen` is `dual_containing_screen`, `oracle` is `H H^T = 0`.
    pub dual_containing: Option<ScreenResult>,
    /// `screen` is `girth6_screen`, `oracle` is exact girth >= 6.
    pub girth6: Option<ScreenResult>,
    /// `(J (r - L + 1), hypotheses hold)`.
    pub rank_bound: Option<(usize, bool)>,
    /// Lightest codeword weight found by the distance search.
    pub distance_upper: Option<usize>,
}

/// One declared parameter against its computed value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Agreement {
    pub name: &'static str,
    pub declared: i64,
    pub computed: Option<i64>,
}

impl Agreement {
    /// Unchecked parameters (no computed value) count as agreeing.
    pub fn holds(&self) -> bool {
        self.computed.is_none_or(|c| c == self.declared)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum QuantumParams {
    EntanglementAssisted(EaqeccParams),
    Css(CssPairCheck),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub kind: CodeKind,
    pub matrices: Vec<MatrixReport>,
    pub quantum: QuantumParams,
    pub declared: Vec<Agreement>,
}

impl CheckReport {
    pub fn screens_agree(&self) -> bool {
        self.matrices.iter().all(|m| {
            m.dual_containing.is_none_or(|s| s.agrees()) && m.girth6.is_none_or(|s| s.agrees())
        })
    }

    /// Structural consistency: the kind's defining property holds and
    /// every declared parameter is reproduced.
    pub fn passes(&self) -> bool {
        let kind_ok = match (&self.quantum, self.kind) {
            (QuantumParams::Css(c), _) => c.compatible,
            (QuantumParams::EntanglementAssisted(p), CodeKind::DualContaining) => p.ebits == 0,
            _ => true,
        };
        kind_ok && self.screens_agree() && self.declared.iter().all(Agreement::holds)
    }

    pub fn n(&self) -> usize {
        self.matrices[0].info.n
    }

    pub fn k_logical(&self) -> i64 {
        match &self.quantum {
            QuantumParams::EntanglementAssisted(p) => p.k_logical as i64,
            QuantumParams::Css(c) => c.k_logical,
        }
    }

    pub fn ebits(&self) -> usize {
        match &self.quantum {
            QuantumParams::EntanglementAssisted(p) => p.ebits,
            QuantumParams::Css(_) => 0,
        }
    }

    pub fn net_rate(&self) -> Rate {
        Rate {
            num: self.k_logical() - self.ebits() as i64,
            den: self.n() as u64,
        }
    }

    /// Smallest distance bound over the searched matrices.
    pub fn distance_upper(&self) -> Option<usize> {
        self.matrices.iter().filter_map(|m| m.distance_upper).min()
    }
}

/// Options for [`analyze`].
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    /// Rounds of distance search per matrix; zero skips the search.
    pub distance_budget: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            distance_budget: 0,
            seed: 1,
        }
    }
}

fn analyze_matrix(label: &'static str, check: &CheckMatrix, opts: &CheckOptions) -> Result<MatrixReport> {
    let h = check.to_binary();
    let info = classical_info(&h);
    let (dual_containing, girth6, bound) = match check.exponent() {
        Some(e) => (
            Some(ScreenResult {
                screen: e.dual_containing_screen(),
                oracle: h.gram().is_zero(),
            }),
            Some(ScreenResult {
                screen: e.girth6_screen(),
                oracle: info.girth.at_least(6),
            }),
            Some((rank_bound(e), rank_bound_applies(e))),
        ),
        None => (None, None, None),
    };
    let distance_upper = if opts.distance_budget > 0 && info.k > 0 {
        Some(min_distance_upper_bound(&h, opts.distance_budget, opts.seed)?.weight)
    } else {
        None
    };
    Ok(MatrixReport {
        label,
        info,
        dual_containing,
        girth6,
        rank_bound: bound,
        distance_upper,
    })
}

pub fn analyze(code: &CodeSpec, opts: &CheckOptions) -> Result<CheckReport> {
    let labels: &[&'static str] = match code.kind {
        CodeKind::CssPair => &["H_C", "H_D"],
        _ => &["H"],
    };
    let matrices = code
        .checks
        .iter()
        .zip(labels)
        .map(|(c, label)| analyze_matrix(label, c, opts))
        .collect::<Result<Vec<_>>>()?;
    let quantum = match code.kind {
        CodeKind::CssPair => QuantumParams::Css(css_pair_check(
            &code.checks[0].to_binary(),
            &code.checks[1].to_binary(),
        )?),
        _ => QuantumParams::EntanglementAssisted(eaqecc_params(&code.checks[0].to_binary(), None)?),
    };
    let mut report = CheckReport {
        name: code.name.clone(),
        kind: code.kind,
        matrices,
        quantum,
        declared: Vec::new(),
    };
    if let Some(d) = code.declared {
        let agree = |name, declared: usize, computed: Option<i64>| Agreement {
            name,
            declared: declared as i64,
            computed,
        };
        report.declared = vec![
            agree("n", d.n, Some(report.n() as i64)),
            agree("k'", d.k_logical, Some(report.k_logical())),
            agree("c", d.ebits, Some(report.ebits() as i64)),
        ];
        if let Some(dd) = d.distance {
            report.declared.push(agree("d", dd, report.distance_upper().map(|w| w as i64)));
        }
    }
    Ok(report)
}

fn kind_name(kind: CodeKind) -> &'static str {
    match kind {
        CodeKind::EntanglementAssisted => "entanglement-assisted",
        CodeKind::DualContaining => "dual-containing",
        CodeKind::CssPair => "CSS pair",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let _ = writeln!(s, "code: {} ({})", self.name, kind_name(self.kind));
        for m in &self.matrices {
            let i = &m.info;
            let _ = writeln!(
                s,
                "{}: n = {}, k = {}, rank = {}, girth = {}",
                m.label,
                i.n,
                i.k,
                i.rank,
                i.girth
            );
            if let Some(sc) = m.dual_containing {
                let _ = writeln!(
                    s,
                    "  dual-containing screen: {} (H H^T = 0: {}){}",
                    sc.screen,
                    sc.oracle,
                    if sc.agrees() { "" } else { "  DISAGREES" }
                );
            }
            if let Some(sc) = m.girth6 {
                let _ = writeln!(
                    s,
                    "  girth-6 screen: {} (girth >= 6: {}){}",
                    sc.screen,
                    sc.oracle,
                    if sc.agrees() { "" } else { "  DISAGREES" }
                );
            }
            if let Some((bound, applies)) = m.rank_bound {
                let _ = writeln!(s, "  rank bound J(r-L+1) = {bound} (hypotheses hold: {})", yes_no(applies));
            }
            if let Some(d) = m.distance_upper {
                let _ = writeln!(s, "  distance upper bound: {d}");
            }
        }
        match &self.quantum {
            QuantumParams::EntanglementAssisted(p) => {
                let _ = writeln!(s, "c = {}", p.ebits);
                let _ = writeln!(s, "k' = {}", p.k_logical);
                let _ = writeln!(s, "params: {p}");
            }
            QuantumParams::Css(c) => {
                let _ = writeln!(s, "compatible (H_C H_D^T = 0): {}", c.compatible);
                let _ = writeln!(s, "k' = {}", c.k_logical);
                let _ = writeln!(s, "params: [[{},{}]]", c.n, c.k_logical);
            }
        }
        let rate = self.net_rate();
        let _ = writeln!(s, "net rate: {rate} = {:.4}", rate.as_f64());
        if self.declared.is_empty() {
            let _ = writeln!(s, "declared parameters: none");
        }
        for a in &self.declared {
            let computed = a.computed.map_or("not checked".into(), |c| c.to_string());
            let _ = writeln!(
                s,
                "declared {} = {}: computed {} [{}]",
                a.name,
                a.declared,
                computed,
                if a.holds() { "ok" } else { "MISMATCH" }
            );
        }
        let _ = write!(s, "result: {}", if self.passes() { "ok" } else { "FAILED" });
        f.write_str(&s)
    }
}
