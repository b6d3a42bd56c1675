//! Base certificates: a point tuple plus the stabilizer order trace, with
//! from-scratch revalidation and a text serialization.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use perm_core::{Error, GroupHandle, Result, StabilizerChain};

/// A verified base: fixing the points in order drives the stabilizer order
/// down the trace, ending at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCertificate {
    pub points: Vec<u32>,
    pub stabilizer_order_trace: Vec<BigUint>,
}

impl BaseCertificate {
    /// Recomputes the trace from scratch and checks every structural
    /// invariant: non-increasing, divisibility, final order 1.
    pub fn verify(&self, group: &GroupHandle, seed: u64) -> Result<()> {
        if self.points.len() != self.stabilizer_order_trace.len() {
            return Err(Error::Input("trace length differs from point count".into()));
        }
        let chain = StabilizerChain::build_with_base_hint(
            group.degree(),
            group.generators(),
            &self.points,
            seed,
        )?;
        let mut prev = group.order().clone();
        for (i, want) in self.stabilizer_order_trace.iter().enumerate() {
            let got = chain.level_order(i + 1);
            if &got != want {
                return Err(Error::Input(format!(
                    "trace mismatch after point {}: recomputed {got}, certificate says {want}",
                    self.points[i]
                )));
            }
            if want > &prev || (&prev % want) != BigUint::zero() {
                return Err(Error::Input("trace is not a divisor chain".into()));
            }
            prev = want.clone();
        }
        match self.stabilizer_order_trace.last() {
            Some(last) if last.is_one() => Ok(()),
            _ => Err(Error::Input("trace does not end at order 1".into())),
        }
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Text form, re-verifiable by the command line's --verify flag.
    pub fn to_text(&self, group_name: &str, degree: usize) -> String {
        let pts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        let trace: Vec<String> = self
            .stabilizer_order_trace
            .iter()
            .map(|o| o.to_string())
            .collect();
        format!(
            "certificate: base\ngroup: {group_name}\ndegree: {degree}\npoints: {}\ntrace: {}\n",
            pts.join(" "),
            trace.join(" ")
        )
    }

    pub fn parse_text(text: &str) -> Result<BaseCertificate> {
        let mut points = None;
        let mut trace = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("points:") {
                let v: std::result::Result<Vec<u32>, _> =
                    rest.split_whitespace().map(str::parse).collect();
                points = Some(v.map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: "bad point list".into(),
                })?);
            } else if let Some(rest) = line.strip_prefix("trace:") {
                let v: std::result::Result<Vec<BigUint>, _> =
                    rest.split_whitespace().map(str::parse).collect();
                trace = Some(v.map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: "bad trace".into(),
                })?);
            }
        }
        match (points, trace) {
            (Some(points), Some(trace)) => Ok(BaseCertificate {
                points,
                stabilizer_order_trace: trace,
            }),
            _ => Err(Error::Parse {
                line: 0,
                msg: "certificate needs points: and trace: lines".into(),
            }),
        }
    }
}

/// Builds a certificate for a tuple already known (or claimed) to be a base.
pub fn certify_base(group: &GroupHandle, points: &[u32], seed: u64) -> Result<BaseCertificate> {
    let chain =
        StabilizerChain::build_with_base_hint(group.degree(), group.generators(), points, seed)?;
    let trace: Vec<BigUint> = (1..=points.len()).map(|i| chain.level_order(i)).collect();
    let cert = BaseCertificate {
        points: points.to_vec(),
        stabilizer_order_trace: trace,
    };
    cert.verify(group, seed.wrapping_add(1))?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use perm_core::load_group_str;

    #[test]
    fn certificate_round_trip_and_verify() {
        let g = load_group_str("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 0).unwrap();
        let cert = certify_base(&g, &[0, 1, 2], 0).unwrap();
        assert_eq!(
            cert.stabilizer_order_trace,
            vec![BigUint::from(6u32), BigUint::from(2u32), BigUint::from(1u32)]
        );
        let text = cert.to_text(g.name(), g.degree());
        let back = BaseCertificate::parse_text(&text).unwrap();
        assert_eq!(back, cert);
        back.verify(&g, 7).unwrap();
        // a non-base fails certification
        assert!(certify_base(&g, &[0, 1], 0).is_err());
        // a tampered trace fails verification
        let mut bad = cert.clone();
        bad.stabilizer_order_trace[0] = BigUint::from(5u32);
        assert!(bad.verify(&g, 0).is_err());
    }
}
