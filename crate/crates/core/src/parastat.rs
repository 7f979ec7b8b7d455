//! Parastatistics generators realized from short root vectors, and
//! exhaustive verification of every triple-relation family.
//!
//! The generator map, with `m = m1 + m2`:
//!
//! * `a_i^{-z}  = z * sqrt(2) * x_{0, z*i}`          degree (0,0), `i = 1..m1`
//! * `ta_i^{-z} = z * sqrt(2) * x_{0, z*(m1+i)}`     degree (1,1), `i = 1..m2`
//! * `b_i^{-z}  = z * sqrt(2) * x_{0, z*(m+i)}`      degree (1,0), `i = 1..n`
//!
//! Generators are addressed by their physical sign, i.e. the superscript
//! after the negation: `a_i^+` is the creation operator. Sign superscripts
//! are carried as integers +1/-1 so that expressions like `|xi - zeta|` and
//! `(xi - eta)` evaluate to 0 or +/-2 directly.
//!
//! Note on ranges: the mixed parafermion family (a3) pairs the `a` symbols
//! (range m1) with the tilde symbols (range m2).

use crate::error::AlgebraError;
use crate::grading::GradingVector;
use crate::linalg::SpanBasis;
use crate::matrix::GradedMatrix;
use crate::osp::OspAlgebra;
use crate::report::VerificationReport;
use crate::scalar::FieldScalar;
use std::fmt;
use std::str::FromStr;

/// The three generator species.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParaFamily {
    /// Parafermions `a_i`, degree (0,0).
    A,
    /// Parafermions `ta_i` (the tilde sort), degree (1,1).
    ATilde,
    /// Parabosons `b_i`, degree (1,0).
    B,
}

impl ParaFamily {
    pub fn degree(self) -> GradingVector {
        match self {
            ParaFamily::A => GradingVector::new(0, 0),
            ParaFamily::ATilde => GradingVector::new(1, 1),
            ParaFamily::B => GradingVector::new(1, 0),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            ParaFamily::A => "a",
            ParaFamily::ATilde => "ã",
            ParaFamily::B => "b",
        }
    }
}

/// One realized generator.
#[derive(Clone, Debug)]
pub struct ParaGenerator {
    pub family: ParaFamily,
    pub site: usize,
    /// Physical sign: +1 creation, -1 annihilation.
    pub sign: i64,
    pub matrix: GradedMatrix,
}

/// Which bracket a relation writes at a given spot.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

/// All verification suites the crate knows how to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyId {
    ShortRootTriple,
    A1,
    A2,
    A3,
    B1,
    Ab1,
    Ab2,
    Ab3,
    GreenParafermi,
    GreenParaboson,
    GmRelativeFermi,
    GmRelativeBose,
}

impl FamilyId {
    pub const ALL: [FamilyId; 12] = [
        FamilyId::ShortRootTriple,
        FamilyId::A1,
        FamilyId::A2,
        FamilyId::A3,
        FamilyId::B1,
        FamilyId::Ab1,
        FamilyId::Ab2,
        FamilyId::Ab3,
        FamilyId::GreenParafermi,
        FamilyId::GreenParaboson,
        FamilyId::GmRelativeFermi,
        FamilyId::GmRelativeBose,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::ShortRootTriple => "short-root-triple",
            FamilyId::A1 => "a1",
            FamilyId::A2 => "a2",
            FamilyId::A3 => "a3",
            FamilyId::B1 => "b1",
            FamilyId::Ab1 => "ab1",
            FamilyId::Ab2 => "ab2",
            FamilyId::Ab3 => "ab3",
            FamilyId::GreenParafermi => "green-parafermi",
            FamilyId::GreenParaboson => "green-paraboson",
            FamilyId::GmRelativeFermi => "gm-relative-fermi",
            FamilyId::GmRelativeBose => "gm-relative-bose",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Generator realization over a fixed algebra, with a configurable
/// normalization constant (the canonical one is sqrt 2).
pub struct ParaSystem<'a> {
    alg: &'a OspAlgebra,
    normalization: FieldScalar,
}

/// Result of the generation (closure) computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    /// Final rank of the iterated bracket span.
    pub rank: usize,
    /// Number of bracket rounds that grew the span.
    pub growth_rounds: usize,
}

impl<'a> ParaSystem<'a> {
    pub fn new(alg: &'a OspAlgebra) -> Self {
        ParaSystem {
            alg,
            normalization: FieldScalar::sqrt2(),
        }
    }

    pub fn with_normalization(alg: &'a OspAlgebra, normalization: FieldScalar) -> Self {
        ParaSystem { alg, normalization }
    }

    pub fn algebra(&self) -> &OspAlgebra {
        self.alg
    }

    fn family_count(&self, family: ParaFamily) -> usize {
        let s = &self.alg.scheme;
        match family {
            ParaFamily::A => s.m1,
            ParaFamily::ATilde => s.m2,
            ParaFamily::B => s.n,
        }
    }

    fn signed_offset(&self, family: ParaFamily, site: usize) -> usize {
        let s = &self.alg.scheme;
        assert!(
            site >= 1 && site <= self.family_count(family),
            "site {site} out of range for {family:?}"
        );
        match family {
            ParaFamily::A => site,
            ParaFamily::ATilde => s.m1 + site,
            ParaFamily::B => s.m1 + s.m2 + site,
        }
    }

    /// The realized generator with physical sign `sign`.
    pub fn generator(&self, family: ParaFamily, site: usize, sign: i64) -> GradedMatrix {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let offset = self.signed_offset(family, site) as i64;
        // g^{-z} = z * c * x_{0, z*offset}  with z = -sign
        let z = -sign;
        self.alg
            .x(0, z * offset)
            .scale(&(&self.normalization * &FieldScalar::from_int(z)))
    }

    /// All 2(m1+m2+n) generators in family/site/sign order.
    pub fn all_generators(&self) -> Vec<ParaGenerator> {
        let mut out = Vec::new();
        for family in [ParaFamily::A, ParaFamily::ATilde, ParaFamily::B] {
            for site in 1..=self.family_count(family) {
                for sign in [1, -1] {
                    out.push(ParaGenerator {
                        family,
                        site,
                        sign,
                        matrix: self.generator(family, site, sign),
                    });
                }
            }
        }
        out
    }

    /// The written bracket, checked against the graded bracket rule for the
    /// operands' formal degrees before evaluation.
    fn bracket_as(
        kind: BracketKind,
        x: &GradedMatrix,
        dx: GradingVector,
        y: &GradedMatrix,
        dy: GradingVector,
    ) -> Result<(GradedMatrix, GradingVector), AlgebraError> {
        let graded_kind = if dx.pairing(dy) == 0 {
            BracketKind::Commutator
        } else {
            BracketKind::Anticommutator
        };
        if graded_kind != kind {
            return Err(AlgebraError::NotHomogeneous(format!(
                "written {kind:?} disagrees with graded bracket for degrees {dx}, {dy}"
            )));
        }
        debug_assert!(x.is_zero() || x.degree() == Some(dx));
        debug_assert!(y.is_zero() || y.degree() == Some(dy));
        let m = match kind {
            BracketKind::Commutator => x.commutator(y),
            BracketKind::Anticommutator => x.anticommutator(y),
        };
        Ok((m, dx.add(dy)))
    }

    /// Evaluate one triple-relation case and record it.
    #[allow(clippy::too_many_arguments)]
    fn check_case(
        &self,
        report: &mut VerificationReport,
        inner: BracketKind,
        outer: BracketKind,
        g1: (ParaFamily, usize, i64),
        g2: (ParaFamily, usize, i64),
        g3: (ParaFamily, usize, i64),
        rhs: &GradedMatrix,
    ) -> Result<(), AlgebraError> {
        let (f1, i1, s1) = g1;
        let (f2, i2, s2) = g2;
        let (f3, i3, s3) = g3;
        let m1 = self.generator(f1, i1, s1);
        let m2 = self.generator(f2, i2, s2);
        let m3 = self.generator(f3, i3, s3);
        let (inner_m, inner_d) = Self::bracket_as(inner, &m1, f1.degree(), &m2, f2.degree())?;
        let (lhs, _) = Self::bracket_as(outer, &inner_m, inner_d, &m3, f3.degree())?;
        if lhs == *rhs {
            report.record_pass();
        } else {
            let fmt_sign = |s: i64| if s > 0 { "+" } else { "-" };
            report.record_failure(
                format!(
                    "{}{}^{} {}{}^{} {}{}^{}",
                    f1.symbol(),
                    i1,
                    fmt_sign(s1),
                    f2.symbol(),
                    i2,
                    fmt_sign(s2),
                    f3.symbol(),
                    i3,
                    fmt_sign(s3),
                ),
                lhs.to_string(),
                rhs.to_string(),
            );
        }
        Ok(())
    }

    /// Linear combination of generators, scaled by `rhs_scale`.
    fn combination(
        &self,
        terms: &[(ParaFamily, usize, i64, i64)],
        rhs_scale: &FieldScalar,
    ) -> GradedMatrix {
        let mut out = GradedMatrix::zero(self.alg.scheme.scheme().clone());
        for &(family, site, sign, coeff) in terms {
            if coeff == 0 {
                continue;
            }
            out = out.add(&self.generator(family, site, sign).scale(&FieldScalar::from_int(coeff)));
        }
        out.scale(rhs_scale)
    }

    /// Right-hand side of the short-root triple relation
    /// `[[[[x_{0i}, x_{0j}]], x_{0k}]] =
    ///  -d_{j,-k} phi_j x_{0i} + d_{i,-k} (-1)^(d_i.d_j) phi_i x_{0j}`.
    pub fn triple_relation_rhs(&self, i: i64, j: i64, k: i64) -> GradedMatrix {
        let s = &self.alg.scheme;
        let mut rhs = GradedMatrix::zero(s.scheme().clone());
        if j == -k {
            rhs = rhs.add(&self.alg.x(0, i).scale(&FieldScalar::from_int(-s.phi(j))));
        }
        if i == -k {
            let sign = s.grade_of(i).pairing_sign(s.grade_of(j)) as i64;
            rhs = rhs.add(&self.alg.x(0, j).scale(&FieldScalar::from_int(sign * s.phi(i))));
        }
        rhs
    }

    /// Exhaustive check of the short-root triple relations over all nonzero
    /// signed (i, j, k).
    pub fn check_short_root_triples(&self, witness_limit: usize) -> VerificationReport {
        let mut report =
            VerificationReport::new(FamilyId::ShortRootTriple.name(), self.alg.params(), witness_limit);
        let idx: Vec<i64> = self.alg.scheme.nonzero_indices().collect();
        for &i in &idx {
            for &j in &idx {
                let inner = self
                    .alg
                    .x(0, i)
                    .graded_bracket(&self.alg.x(0, j))
                    .expect("shared scheme");
                for &k in &idx {
                    let lhs = inner.graded_bracket(&self.alg.x(0, k)).expect("shared scheme");
                    let rhs = self.triple_relation_rhs(i, j, k);
                    if lhs == rhs {
                        report.record_pass();
                    } else {
                        report.record_failure(
                            format!("(i,j,k)=({i},{j},{k})"),
                            lhs.to_string(),
                            rhs.to_string(),
                        );
                    }
                }
            }
        }
        report.finish()
    }

    /// Run one relation family suite with the canonical normalization.
    pub fn verify_family(
        &self,
        family: FamilyId,
        witness_limit: usize,
    ) -> Result<VerificationReport, AlgebraError> {
        self.verify_family_scaled(family, witness_limit, &FieldScalar::one())
    }

    /// Run a suite with the right-hand sides scaled by `rhs_scale`. With the
    /// canonical sqrt(2) normalization the scale is 1; a normalization `c`
    /// instead requires `c^2 / 2`.
    pub fn verify_family_scaled(
        &self,
        family: FamilyId,
        witness_limit: usize,
        rhs_scale: &FieldScalar,
    ) -> Result<VerificationReport, AlgebraError> {
        use BracketKind::{Anticommutator as AC, Commutator as C};
        use ParaFamily::{ATilde, A, B};

        if family == FamilyId::ShortRootTriple {
            return Ok(self.check_short_root_triples(witness_limit));
        }

        let mut report = VerificationReport::new(family.name(), self.alg.params(), witness_limit);
        let m1 = self.family_count(A);
        let m2 = self.family_count(ATilde);
        let n = self.family_count(B);
        let signs = [1i64, -1];

        // Green-style defining relations of a single parafermion sort:
        // [[f_i^z, f_j^e], f_k^x] = |x-e| d_jk f_i^z - |x-z| d_ik f_j^e
        let parafermi_sort = |report: &mut VerificationReport,
                                  fam: ParaFamily|
         -> Result<(), AlgebraError> {
            let count = self.family_count(fam);
            for i in 1..=count {
                for j in 1..=count {
                    for k in 1..=count {
                        for z in signs {
                            for e in signs {
                                for x in signs {
                                    let rhs = self.combination(
                                        &[
                                            (fam, i, z, if j == k { (x - e).abs() } else { 0 }),
                                            (fam, j, e, if i == k { -(x - z).abs() } else { 0 }),
                                        ],
                                        rhs_scale,
                                    );
                                    self.check_case(
                                        report,
                                        C,
                                        C,
                                        (fam, i, z),
                                        (fam, j, e),
                                        (fam, k, x),
                                        &rhs,
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        };

        // Paraboson defining relations:
        // [{b_i^z, b_j^e}, b_k^x] = (x-e) d_jk b_i^z + (x-z) d_ik b_j^e
        let paraboson_sort = |report: &mut VerificationReport| -> Result<(), AlgebraError> {
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        for z in signs {
                            for e in signs {
                                for x in signs {
                                    let rhs = self.combination(
                                        &[
                                            (B, i, z, if j == k { x - e } else { 0 }),
                                            (B, j, e, if i == k { x - z } else { 0 }),
                                        ],
                                        rhs_scale,
                                    );
                                    self.check_case(
                                        report,
                                        AC,
                                        C,
                                        (B, i, z),
                                        (B, j, e),
                                        (B, k, x),
                                        &rhs,
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        };

        // Relative para-Fermi set between parafermion sort `f` and the b's.
        let relative_fermi = |report: &mut VerificationReport,
                                  f: ParaFamily|
         -> Result<(), AlgebraError> {
            let fc = self.family_count(f);
            let zero = GradedMatrix::zero(self.alg.scheme.scheme().clone());
            for z in signs {
                for e in signs {
                    for x in signs {
                        // [[f_i, f_j], b_k] = 0
                        for i in 1..=fc {
                            for j in 1..=fc {
                                for k in 1..=n {
                                    self.check_case(report, C, C, (f, i, z), (f, j, e), (B, k, x), &zero)?;
                                }
                            }
                        }
                        // [{b_i, b_j}, f_k] = 0
                        for i in 1..=n {
                            for j in 1..=n {
                                for k in 1..=fc {
                                    self.check_case(report, AC, C, (B, i, z), (B, j, e), (f, k, x), &zero)?;
                                }
                            }
                        }
                        for i in 1..=fc {
                            for j in 1..=n {
                                // [[f_i^z, b_j^e], f_k^x] = -|x-z| d_ik b_j^e
                                for k in 1..=fc {
                                    let rhs = self.combination(
                                        &[(B, j, e, if i == k { -(x - z).abs() } else { 0 })],
                                        rhs_scale,
                                    );
                                    self.check_case(report, C, C, (f, i, z), (B, j, e), (f, k, x), &rhs)?;
                                }
                                // {[f_i^z, b_j^e], b_k^x} = (x-e) d_jk f_i^z
                                for k in 1..=n {
                                    let rhs = self.combination(
                                        &[(f, i, z, if j == k { x - e } else { 0 })],
                                        rhs_scale,
                                    );
                                    self.check_case(report, C, AC, (f, i, z), (B, j, e), (B, k, x), &rhs)?;
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        };

        // Relative para-Bose set between the tilde parafermions and the b's.
        let relative_bose = |report: &mut VerificationReport| -> Result<(), AlgebraError> {
            let zero = GradedMatrix::zero(self.alg.scheme.scheme().clone());
            for z in signs {
                for e in signs {
                    for x in signs {
                        // [[ta_i, ta_j], b_k] = 0
                        for i in 1..=m2 {
                            for j in 1..=m2 {
                                for k in 1..=n {
                                    self.check_case(
                                        report, C, C, (ATilde, i, z), (ATilde, j, e), (B, k, x), &zero,
                                    )?;
                                }
                            }
                        }
                        // [{b_i, b_j}, ta_k] = 0
                        for i in 1..=n {
                            for j in 1..=n {
                                for k in 1..=m2 {
                                    self.check_case(
                                        report, AC, C, (B, i, z), (B, j, e), (ATilde, k, x), &zero,
                                    )?;
                                }
                            }
                        }
                        for i in 1..=m2 {
                            for j in 1..=n {
                                // {{ta_i^z, b_j^e}, ta_k^x} = |x-z| d_ik b_j^e
                                for k in 1..=m2 {
                                    let rhs = self.combination(
                                        &[(B, j, e, if i == k { (x - z).abs() } else { 0 })],
                                        rhs_scale,
                                    );
                                    self.check_case(
                                        report, AC, AC, (ATilde, i, z), (B, j, e), (ATilde, k, x), &rhs,
                                    )?;
                                }
                                // [{ta_i^z, b_j^e}, b_k^x] = (x-e) d_jk ta_i^z
                                for k in 1..=n {
                                    let rhs = self.combination(
                                        &[(ATilde, i, z, if j == k { x - e } else { 0 })],
                                        rhs_scale,
                                    );
                                    self.check_case(
                                        report, AC, C, (ATilde, i, z), (B, j, e), (B, k, x), &rhs,
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        };

        match family {
            FamilyId::ShortRootTriple => unreachable!(),
            FamilyId::A1 => parafermi_sort(&mut report, A)?,
            FamilyId::A2 => parafermi_sort(&mut report, ATilde)?,
            FamilyId::A3 => {
                let zero = GradedMatrix::zero(self.alg.scheme.scheme().clone());
                for z in signs {
                    for e in signs {
                        for x in signs {
                            // [[a_i, a_j], ta_k] = 0 and [[ta_i, ta_j], a_k] = 0
                            for i in 1..=m1 {
                                for j in 1..=m1 {
                                    for k in 1..=m2 {
                                        self.check_case(
                                            &mut report, C, C,
                                            (A, i, z), (A, j, e), (ATilde, k, x), &zero,
                                        )?;
                                    }
                                }
                            }
                            for i in 1..=m2 {
                                for j in 1..=m2 {
                                    for k in 1..=m1 {
                                        self.check_case(
                                            &mut report, C, C,
                                            (ATilde, i, z), (ATilde, j, e), (A, k, x), &zero,
                                        )?;
                                    }
                                }
                            }
                            for i in 1..=m1 {
                                for j in 1..=m2 {
                                    // [[a_i^z, ta_j^e], a_k^x] = -|x-z| d_ik ta_j^e
                                    for k in 1..=m1 {
                                        let rhs = self.combination(
                                            &[(ATilde, j, e, if i == k { -(x - z).abs() } else { 0 })],
                                            rhs_scale,
                                        );
                                        self.check_case(
                                            &mut report, C, C,
                                            (A, i, z), (ATilde, j, e), (A, k, x), &rhs,
                                        )?;
                                    }
                                    // [[a_i^z, ta_j^e], ta_k^x] = |x-e| d_jk a_i^z
                                    for k in 1..=m2 {
                                        let rhs = self.combination(
                                            &[(A, i, z, if j == k { (x - e).abs() } else { 0 })],
                                            rhs_scale,
                                        );
                                        self.check_case(
                                            &mut report, C, C,
                                            (A, i, z), (ATilde, j, e), (ATilde, k, x), &rhs,
                                        )?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            FamilyId::B1 => paraboson_sort(&mut report)?,
            FamilyId::Ab1 => relative_fermi(&mut report, A)?,
            FamilyId::Ab2 => relative_bose(&mut report)?,
            FamilyId::Ab3 => {
                let zero = GradedMatrix::zero(self.alg.scheme.scheme().clone());
                for i in 1..=m1 {
                    for j in 1..=m2 {
                        for k in 1..=n {
                            for z in signs {
                                for e in signs {
                                    for x in signs {
                                        // All three distinct-grading expressions vanish.
                                        self.check_case(
                                            &mut report, C, AC,
                                            (A, i, z), (ATilde, j, e), (B, k, x), &zero,
                                        )?;
                                        self.check_case(
                                            &mut report, AC, C,
                                            (ATilde, j, e), (B, k, x), (A, i, z), &zero,
                                        )?;
                                        self.check_case(
                                            &mut report, C, AC,
                                            (B, k, x), (A, i, z), (ATilde, j, e), &zero,
                                        )?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            FamilyId::GreenParafermi => {
                // Green's parafermion triple relations for whichever single
                // parafermion sort the scheme provides.
                if m1 >= 1 {
                    parafermi_sort(&mut report, A)?;
                } else if m2 >= 1 {
                    parafermi_sort(&mut report, ATilde)?;
                } else {
                    return Err(AlgebraError::PreconditionUnmet {
                        suite: family.name().into(),
                        requirement: "m1 >= 1 or m2 >= 1".into(),
                    });
                }
            }
            FamilyId::GreenParaboson => {
                if n == 0 {
                    return Err(AlgebraError::PreconditionUnmet {
                        suite: family.name().into(),
                        requirement: "n >= 1".into(),
                    });
                }
                paraboson_sort(&mut report)?;
            }
            FamilyId::GmRelativeFermi => {
                if m1 == 0 || n == 0 {
                    return Err(AlgebraError::PreconditionUnmet {
                        suite: family.name().into(),
                        requirement: "m1 >= 1 and n >= 1".into(),
                    });
                }
                relative_fermi(&mut report, A)?;
            }
            FamilyId::GmRelativeBose => {
                if m2 == 0 || n == 0 {
                    return Err(AlgebraError::PreconditionUnmet {
                        suite: family.name().into(),
                        requirement: "m2 >= 1 and n >= 1".into(),
                    });
                }
                relative_bose(&mut report)?;
            }
        }
        Ok(report.finish())
    }

    /// Generation claim: iteratively bracket the span of the 2N short root
    /// vectors until the exact rank stops growing.
    pub fn closure_dimension(&self) -> ClosureResult {
        let mut span = SpanBasis::new();
        let mut kept: Vec<GradedMatrix> = Vec::new();
        for i in self.alg.scheme.nonzero_indices() {
            let m = self.alg.x(0, i);
            if span.insert(self.alg.vectorize(&m)) {
                kept.push(m);
            }
        }
        let mut frontier_start = 0;
        let mut growth_rounds = 0;
        loop {
            let len_before = kept.len();
            let mut new_elems = Vec::new();
            // Only pairs touching the last round's additions can be new.
            for p in 0..len_before {
                for q in 0..len_before {
                    if p < frontier_start && q < frontier_start {
                        continue;
                    }
                    let b = kept[p].graded_bracket(&kept[q]).expect("shared scheme");
                    if span.insert(self.alg.vectorize(&b)) {
                        new_elems.push(b);
                    }
                }
            }
            if new_elems.is_empty() {
                break;
            }
            growth_rounds += 1;
            frontier_start = len_before;
            kept.extend(new_elems);
        }
        ClosureResult {
            rank: span.rank(),
            growth_rounds,
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::DEFAULT_WITNESS_LIMIT;

    fn system(alg: &OspAlgebra) -> ParaSystem<'_> {
        ParaSystem::new(alg)
    }

    #[test]
    fn generator_census_and_degrees() {
        let alg = OspAlgebra::build(1, 1, 1).unwrap();
        let sys = system(&alg);
        let gens = sys.all_generators();
        assert_eq!(gens.len(), 6);
        for g in &gens {
            assert!(!g.matrix.is_zero());
            assert_eq!(g.matrix.degree(), Some(g.family.degree()));
        }
    }

    #[test]
    fn generator_map_examples() {
        let alg = OspAlgebra::build(1, 1, 1).unwrap();
        let sys = system(&alg);
        // a_1^- (zeta = +): sqrt(2) x_{0,1}
        assert_eq!(
            sys.generator(ParaFamily::A, 1, -1),
            alg.x(0, 1).scale(&FieldScalar::sqrt2())
        );
        // b_1^+ (zeta = -): sqrt(2) * (-1) * x_{0,-(m+1)} with m = 2 ... note
        // g^{-z} = z c x_{0,z i} so b_1^+ = -sqrt(2) x_{0,-3}.
        assert_eq!(
            sys.generator(ParaFamily::B, 1, 1),
            alg.x(0, -3).scale(&FieldScalar::sqrt2()).neg()
        );
    }

    #[test]
    fn short_root_triple_example() {
        // i=1, j=-1, k=1 in (1,0,0): lhs = -phi(-1) x_{0,1} = -x_{0,1}.
        let alg = OspAlgebra::build(1, 0, 0).unwrap();
        let sys = system(&alg);
        let inner = alg.x(0, 1).graded_bracket(&alg.x(0, -1)).unwrap();
        let lhs = inner.graded_bracket(&alg.x(0, 1)).unwrap();
        assert_eq!(lhs, alg.x(0, 1).neg());
        assert_eq!(lhs, sys.triple_relation_rhs(1, -1, 1));
    }

    #[test]
    fn short_root_triples_exhaustive_small() {
        for (m1, m2, n) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)] {
            let alg = OspAlgebra::build(m1, m2, n).unwrap();
            let report = system(&alg).check_short_root_triples(DEFAULT_WITNESS_LIMIT);
            assert!(report.passed(), "{}", report.summary_line());
        }
    }

    #[test]
    fn b1_single_site_case() {
        // [{b1^-, b1^-}, b1^+] = 4 b1^-
        let alg = OspAlgebra::build(0, 0, 1).unwrap();
        let sys = system(&alg);
        let bm = sys.generator(ParaFamily::B, 1, -1);
        let bp = sys.generator(ParaFamily::B, 1, 1);
        let lhs = bm.anticommutator(&bm).commutator(&bp);
        assert_eq!(lhs, bm.scale(&FieldScalar::from_int(4)));
    }

    #[test]
    fn all_families_pass_at_111() {
        let alg = OspAlgebra::build(1, 1, 1).unwrap();
        let sys = system(&alg);
        for family in FamilyId::ALL {
            let report = sys.verify_family(family, DEFAULT_WITNESS_LIMIT).unwrap();
            assert!(report.passed(), "{}", report.summary_line());
            assert!(!report.vacuous, "{} should not be vacuous at (1,1,1)", family);
        }
    }

    #[test]
    fn empty_range_is_vacuous() {
        let alg = OspAlgebra::build(1, 0, 1).unwrap();
        let sys = system(&alg);
        let report = sys.verify_family(FamilyId::A2, DEFAULT_WITNESS_LIMIT).unwrap();
        assert!(report.vacuous);
        assert_eq!(report.total_cases, 0);
    }

    #[test]
    fn degenerate_preconditions() {
        let alg = OspAlgebra::build(1, 0, 1).unwrap();
        let sys = system(&alg);
        assert!(matches!(
            sys.verify_family(FamilyId::GmRelativeBose, DEFAULT_WITNESS_LIMIT),
            Err(AlgebraError::PreconditionUnmet { .. })
        ));
        assert!(sys
            .verify_family(FamilyId::GmRelativeFermi, DEFAULT_WITNESS_LIMIT)
            .unwrap()
            .passed());
    }

    #[test]
    fn degenerations_pass() {
        let fermi = OspAlgebra::build(1, 0, 1).unwrap();
        assert!(system(&fermi)
            .verify_family(FamilyId::GmRelativeFermi, DEFAULT_WITNESS_LIMIT)
            .unwrap()
            .passed());
        let bose = OspAlgebra::build(0, 1, 1).unwrap();
        assert!(system(&bose)
            .verify_family(FamilyId::GmRelativeBose, DEFAULT_WITNESS_LIMIT)
            .unwrap()
            .passed());
        let green_pf = OspAlgebra::build(2, 0, 0).unwrap();
        assert!(system(&green_pf)
            .verify_family(FamilyId::GreenParafermi, DEFAULT_WITNESS_LIMIT)
            .unwrap()
            .passed());
        let green_pb = OspAlgebra::build(0, 0, 2).unwrap();
        let r = system(&green_pb)
            .verify_family(FamilyId::GreenParaboson, DEFAULT_WITNESS_LIMIT)
            .unwrap();
        assert!(r.passed());
        assert_eq!(r.total_cases, 64);
    }

    #[test]
    fn substitution_consistency_with_triple_relation() {
        // Family cases must agree with the short-root triple relation after
        // substituting the generator map; both routes computed independently.
        let alg = OspAlgebra::build(1, 1, 1).unwrap();
        let sys = system(&alg);
        let c = FieldScalar::sqrt2();
        // b1 with i=j=k=1: generators b^z = (-z) c x_{0,-z*3}.
        for z in [1i64, -1] {
            for e in [1i64, -1] {
                for x in [1i64, -1] {
                    let signed = |s: i64| -s * 3;
                    let coeff = FieldScalar::from_int(-z * -e * -x);
                    let scale = &(&c * &c) * &(&c * &coeff);
                    let via_triple = {
                        let inner = alg
                            .x(0, signed(z))
                            .graded_bracket(&alg.x(0, signed(e)))
                            .unwrap();
                        inner.graded_bracket(&alg.x(0, signed(x))).unwrap().scale(&scale)
                    };
                    let bm_z = sys.generator(ParaFamily::B, 1, z);
                    let bm_e = sys.generator(ParaFamily::B, 1, e);
                    let bm_x = sys.generator(ParaFamily::B, 1, x);
                    let via_family = bm_z.anticommutator(&bm_e).commutator(&bm_x);
                    assert_eq!(via_triple, via_family, "z={z} e={e} x={x}");
                }
            }
        }
    }

    #[test]
    fn closure_reaches_full_dimension() {
        for (m1, m2, n, dim) in [(1, 0, 0, 3), (0, 0, 1, 5), (1, 1, 1, 23)] {
            let alg = OspAlgebra::build(m1, m2, n).unwrap();
            let result = system(&alg).closure_dimension();
            assert_eq!(result.rank, dim, "({m1},{m2},{n})");
            assert_eq!(alg.dimension(), dim);
            assert!(result.growth_rounds <= 3, "rounds = {}", result.growth_rounds);
        }
    }

    #[test]
    fn scaling_robustness_factor() {
        // With normalization c = 2 sqrt(2) the right-hand sides acquire
        // c^2 / 2 = 4; with the unscaled rhs the suite must fail.
        let alg = OspAlgebra::build(0, 0, 1).unwrap();
        let sys = ParaSystem::with_normalization(&alg, FieldScalar::sqrt2_ratio(2, 1));
        let scaled = sys
            .verify_family_scaled(FamilyId::B1, DEFAULT_WITNESS_LIMIT, &FieldScalar::from_int(4))
            .unwrap();
        assert!(scaled.passed(), "{}", scaled.summary_line());
        let unscaled = sys.verify_family(FamilyId::B1, DEFAULT_WITNESS_LIMIT).unwrap();
        assert!(!unscaled.passed());
    }

    #[test]
    fn mutated_embedding_fails_families() {
        let alg = OspAlgebra::build_mutated(1, 1, 1).unwrap();
        let sys = system(&alg);
        let triples = sys.check_short_root_triples(DEFAULT_WITNESS_LIMIT);
        assert!(!triples.passed());
        assert!(!triples.witnesses.is_empty());
    }
}
