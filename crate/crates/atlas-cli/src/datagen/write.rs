//! Assembles the shipped data directory: group files, class tables,
//! manifests, Weyl character queries, order checks and provenance notes.

use super::{corpus, golay::GolayCode, hsgraph, leech, linear, mathieu};
use perm_core::{Permutation, RngState, StabilizerChain};
use std::fs;
use std::path::Path;

/// Tries to replace a generating set by two or three random elements with
/// the same group order; falls back to the originals.
fn slim_generators(degree: usize, gens: &[Permutation], seed: u64) -> Vec<Permutation> {
    let chain = match StabilizerChain::build(degree, gens, seed) {
        Ok(c) => c,
        Err(_) => return gens.to_vec(),
    };
    let target = chain.order().clone();
    let mut rng = RngState::from_seed(seed ^ 0x534c494d);
    for count in [2usize, 3] {
        for _ in 0..30 {
            let cand: Vec<Permutation> = (0..count).map(|_| chain.random_element(&mut rng)).collect();
            if cand.iter().any(|g| g.is_identity()) {
                continue;
            }
            if let Ok(c) = StabilizerChain::build(degree, &cand, seed) {
                if c.order() == &target {
                    return cand;
                }
            }
        }
    }
    gens.to_vec()
}

fn group_file(degree: usize, name: &str, gens: &[Permutation]) -> String {
    let mut out = String::new();
    out.push_str(&format!("degree: {degree}\n"));
    out.push_str(&format!("name: {name}\n"));
    for g in gens {
        out.push_str(&g.to_row());
        out.push('\n');
    }
    out
}

struct Writer<'a> {
    root: &'a Path,
    checks: Vec<(String, String)>,
    seed: u64,
}

impl Writer<'_> {
    fn write_group(&mut self, rel: &str, name: &str, degree: usize, gens: &[Permutation], slim: bool) {
        let gens = if slim {
            slim_generators(degree, gens, self.seed)
        } else {
            gens.to_vec()
        };
        let chain = StabilizerChain::build(degree, &gens, self.seed).unwrap();
        let path = self.root.join(rel);
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, group_file(degree, name, &gens)).unwrap();
        self.checks.push((rel.to_string(), chain.order().to_string()));
        println!("  wrote {rel}: degree {degree}, order {}", chain.order());
    }
}

pub fn run(root: &Path, seed: u64, include_big: bool) {
    let mut w = Writer {
        root,
        checks: Vec::new(),
        seed,
    };
    println!("building the Golay code and M24");
    let code = GolayCode::build();
    let m24 = mathieu::m24_generators(&code);
    w.write_group("groups/m24.grp", "M24", 24, &m24, true);

    let m23 = mathieu::restrict(
        &mathieu::stabilizer_generators(24, &m24, &[23], seed),
        23,
    );
    w.write_group("groups/m23.grp", "M23", 23, &m23, true);
    let m22 = mathieu::restrict(
        &mathieu::stabilizer_generators(24, &m24, &[23, 22], seed),
        22,
    );
    w.write_group("groups/m22.grp", "M22", 22, &m22, true);

    let m12 = mathieu::m12_generators();
    w.write_group("groups/m12.grp", "M12", 12, &m12, true);
    w.write_group("groups/m11.grp", "M11", 11, &mathieu::m11_generators(), false);
    w.write_group("groups/m11_in_m12.grp", "M11_in_M12", 12, &m12[..2].to_vec(), false);

    println!("writing symmetric-group pairs");
    w.write_group("groups/s4.grp", "S4", 4, &corpus::symmetric(4), false);
    w.write_group("groups/s6.grp", "S6", 6, &corpus::symmetric(6), false);
    w.write_group("groups/pgl25_in_s6.grp", "PGL2_5", 6, &corpus::pgl25_in_s6(), false);
    w.write_group("groups/s8.grp", "S8", 8, &corpus::symmetric(8), false);
    w.write_group("groups/s4wrs2_in_s8.grp", "S4wrS2", 8, &corpus::s4_wr_s2(), false);

    println!("writing linear groups");
    let sl32 = linear::sl_generators(3, 2);
    let sl33 = linear::sl_generators(3, 3);
    w.write_group("groups/l32_flags21.grp", "L3_2_flags", 21, &linear::action_on_flags(&sl32, 2), false);
    w.write_group("groups/l32_points7.grp", "L3_2_points", 7, &linear::action_on_points(&sl32, 3, 2), false);
    w.write_group("groups/l32_lines7.grp", "L3_2_lines", 7, &linear::action_on_hyperplanes(&sl32, 3, 2), false);
    w.write_group("groups/l33_flags52.grp", "L3_3_flags", 52, &linear::action_on_flags(&sl33, 3), false);
    w.write_group("groups/l33_points13.grp", "L3_3_points", 13, &linear::action_on_points(&sl33, 3, 3), false);
    w.write_group("groups/l33_lines13.grp", "L3_3_lines", 13, &linear::action_on_hyperplanes(&sl33, 3, 3), false);
    w.write_group("groups/psl43_40.grp", "PSL4_3", 40, &linear::psl43_on_40(), true);
    w.write_group("groups/autl43_80.grp", "Aut_L4_3", 80, &linear::aut_l43_on_80(), true);

    println!("writing the small-degree corpus");
    write_corpus(&mut w);

    if include_big {
        println!("building HS on 100 points");
        let hs = hsgraph::hs_on_100(&code, &m24, seed);
        w.write_group("groups/hs100.grp", "HS", 100, &hs.generators, true);

        println!("building Co3 on 276 points (birthday search)");
        let co3 = leech::co3_on_276(&code, &m24, seed);
        w.write_group("groups/co3_276.grp", "Co3", 276, &co3.generators, true);
    }

    println!("writing tables, queries and manifests");
    let checks: String = w
        .checks
        .iter()
        .map(|(f, o)| format!("{f}\t{o}\n"))
        .collect();
    fs::write(root.join("checks.tsv"), checks).unwrap();

    fs::create_dir_all(root.join("tables")).unwrap();
    fs::write(
        root.join("tables/f4q2_fragment.csv"),
        "label,class_size,intersection\nf4q2_nonroot,4194304,131072\n",
    )
    .unwrap();

    fs::create_dir_all(root.join("queries")).unwrap();
    fs::write(
        root.join("queries/e6_p16_index.wq"),
        "type: E6\nkind: index\nparabolic: a2,a3,a4,a5\n",
    )
    .unwrap();
    fs::write(
        root.join("queries/e6_a5a1.wq"),
        "type: E6\nkind: chi\nJ: a0,a1,a3,a4,a5,a6\nw: identity\nparabolic: a2,a3,a4,a5\n",
    )
    .unwrap();
    fs::write(
        root.join("queries/a1_borel_index.wq"),
        "type: A1\nkind: index\nparabolic:\n",
    )
    .unwrap();

    fs::create_dir_all(root.join("manifests")).unwrap();
    fs::write(root.join("manifests/theorem1_desk.cases"), THEOREM1_MANIFEST).unwrap();
    fs::write(root.join("manifests/counting.cases"), COUNTING_MANIFEST).unwrap();
    fs::write(root.join("PROVENANCE.md"), PROVENANCE).unwrap();
    println!("done");
}

fn write_corpus(w: &mut Writer) {
    let mut add = |file: &str, name: &str, degree: usize, gens: Vec<Permutation>| {
        w.write_group(&format!("corpus8/{file}.grp"), name, degree, &gens, false);
    };
    for n in 2..=8usize {
        add(&format!("c{n}"), &format!("C{n}"), n, corpus::cyclic(n));
    }
    for n in 3..=8usize {
        add(&format!("s{n}"), &format!("S{n}"), n, corpus::symmetric(n));
    }
    for n in 4..=8usize {
        add(&format!("a{n}"), &format!("A{n}"), n, corpus::alternating(n));
    }
    for n in 4..=8usize {
        add(&format!("d{n}"), &format!("D{n}"), n, corpus::dihedral(n));
    }
    add("v4", "V4", 4, vec![
        Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
        Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
    ]);
    add("f20", "F20", 5, corpus::affine_frobenius(5, 2));
    add("f21", "F21", 7, corpus::affine_frobenius(7, 2));
    add("f42", "F42", 7, corpus::affine_frobenius(7, 3));
    add("s3reg", "S3_regular", 6, corpus::regular_representation(&corpus::symmetric(3), 1));
    add("a4_pairs", "A4_on_pairs", 6, corpus::action_on_subsets(&corpus::alternating(4), 2));
    add("s4_pairs", "S4_on_pairs", 6, corpus::action_on_subsets(&corpus::symmetric(4), 2));
    add("psl25_on6", "PSL2_5_on6", 6, corpus::projective_line_group(5, 4));
    add("pgl25_on6", "PGL2_5_on6", 6, corpus::projective_line_group(5, 2));
    add("psl27_on8", "PSL2_7_on8", 8, corpus::projective_line_group(7, 2));
    add("pgl27_on8", "PGL2_7_on8", 8, corpus::projective_line_group(7, 3));
    add("agl18", "AGL1_8", 8, corpus::agl1_8(false));
    add("agammal18", "AGammaL1_8", 8, corpus::agl1_8(true));
    add("agl32", "AGL3_2", 8, corpus::agl3_2());
    add("q8", "Q8", 8, corpus::quaternion_8());
    add("d4reg", "D4_regular", 8, corpus::regular_representation(&corpus::dihedral(4), 2));
    add("c4xc2", "C4xC2", 8, vec![
        Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap(),
        Permutation::from_cycles(8, &[vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]).unwrap(),
    ]);
    add("c2cube", "C2xC2xC2", 8, vec![
        Permutation::from_cycles(8, &[vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]).unwrap(),
        Permutation::from_cycles(8, &[vec![0, 2], vec![1, 3], vec![4, 6], vec![5, 7]]).unwrap(),
        Permutation::from_cycles(8, &[vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]).unwrap(),
    ]);
    add("s4wr2", "S4wrS2", 8, corpus::s4_wr_s2());
}

const THEOREM1_MANIFEST: &str = "\
# base-size verification, desk scale
# case_id | group | subgroup | claim | value | mode | budget
m24_b7      | groups/m24.grp      | natural                 | base_size = | 7 | certified | 5000000
m23_b6      | groups/m23.grp      | natural                 | base_size = | 6 | certified | 2000000
m22_b5      | groups/m22.grp      | natural                 | base_size = | 5 | certified | 1000000
m12_m11_b5  | groups/m12.grp      | groups/m11_in_m12.grp   | base_size = | 5 | certified | 1000000
s6_pgl25_b5 | groups/s6.grp       | groups/pgl25_in_s6.grp  | base_size = | 5 | certified | 1000000
s8_s4wr2_b5 | groups/s8.grp       | groups/s4wrs2_in_s8.grp | base_size = | 5 | certified | 1000000
hs_m22_b5   | groups/hs100.grp    | natural                 | base_size = | 5 | certified | 5000000
co3_mcl2_b6 | groups/co3_276.grp  | natural                 | base_size = | 6 | evidence  | 1000000
#
# Disabled rows: no desk-scale faithful permutation representation is
# shipped for these point stabilizers. To enable one, drop a generator
# file at the stated path, add its order to checks.tsv, and uncomment.
# co2_b6     | groups/co2.grp     | natural | base_size = | 6 | evidence | 1000000
# fi22_2_b6  | groups/fi22_2.grp  | natural | base_size = | 6 | evidence | 1000000
";

const COUNTING_MANIFEST: &str = "\
# element counting and bound-ledger checks
# case_id | group | subgroup | claim | value | mode | budget
i2_aut_l43   | groups/autl43_80.grp       | - | i_r_count        | 2:27639 | certified | 300000
i3_l43       | groups/psl43_40.grp        | - | i_r_count        | 3:82160 | certified | 300000
f4q2_qhat    | tables/f4q2_fragment.csv   | - | qhat_less_than_1 | 5       | certified | -
e6_a5a1_chi  | queries/e6_a5a1.wq         | - | chi_polynomial   | 4,11,20,28,38,42,41,33,26,16,8,2,1 | certified | -
";

const PROVENANCE: &str = "\
# Data provenance

Every file in this directory is produced by `atlas datagen`, which rebuilds
it deterministically from first principles and certifies the stated group
orders with verified stabilizer chains before writing. `checks.tsv` lists
the expected order of every group file; loaders re-verify them.

## Group files

- `groups/m24.grp` - M24 on 24 points. The binary Golay code is spanned by
  the cyclic shifts of the quadratic-residue indicator vector of length 23,
  extended by a parity coordinate and certified by its weight distribution
  (759 octads). M24 is generated by the Mobius maps x -> x+1, x -> 2x,
  x -> -1/x on PG(1,23) together with the classical cubing map
  (x -> x^3/9 on residues, x -> 9x^3 on non-residues); all four maps are
  checked to preserve the code and the group order 244823040 and
  5-transitivity are certified by a stabilizer chain.
- `groups/m23.grp`, `groups/m22.grp` - one- and two-point stabilizers of
  M24, restricted to 23 and 22 points (orders 10200960 and 443520).
- `groups/m12.grp`, `groups/m11.grp` - the classical transitive-extension
  generators: an 11-cycle, a double 4-cycle, and (for M12) the extending
  involution; orders 95040 and 7920 are certified. `m11_in_m12.grp` is the
  stabilizer of the last point inside M12, on 12 points.
- `groups/s6.grp` + `groups/pgl25_in_s6.grp` - S6 with the transitive
  PGL2(5) of order 120 acting on PG(1,5) (cosets give the second
  2-transitive degree-6 action of S6).
- `groups/s8.grp` + `groups/s4wrs2_in_s8.grp` - S8 with the stabilizer of
  the partition {{0..3},{4..7}}, order 1152, index 35.
- `groups/l32_*.grp`, `groups/l33_*.grp` - SL3(2) and SL3(3) generated by
  a transvection and a signed cycle, acting on projective points, lines,
  and complete flags of PG(2,q); orders 168 and 5616.
- `groups/psl43_40.grp` - PSL4(3) on the 40 points of PG(3,3), order
  6065280.
- `groups/autl43_80.grp` - the full automorphism group PGL4(3).2 of L4(3)
  acting on the 40 points plus 40 hyperplanes of PG(3,3); the extra
  involution is induced by inverse-transpose. Order 24261120.
- `groups/hs100.grp` - HS on the 100 vertices of the Higman-Sims graph
  (hub + 22 points + 77 hexads of S(3,6,22), the hexads being octads
  through two fixed coordinates). M22 fixes the hub; an automorphism
  moving the hub is found by graph backtracking, and the derived subgroup
  of the resulting group is HS, order 44352000, with vertex stabilizer
  M22 of order 443520 at point 0.
- `groups/co3_276.grp` - Co3 acting 2-transitively on the 276 unordered
  pairs {w, v-w} of type-2 Leech lattice vectors summing to the type-3
  vector v = (5,1^23). Coordinate permutations fixing coordinate 0 give
  M23; one further stabilizing element is found by a birthday search over
  words in Golay sign changes, coordinate permutations and the tetrad map,
  and maximality of M23 makes the pair generate Co3. Order 495766656000,
  point stabilizer McL.2 of order 1796256000.
- `corpus8/*.grp` - seed generators for transitive groups of degree <= 8:
  cyclic, dihedral, alternating, symmetric, Klein four, Frobenius groups
  F20/F21/F42, regular representations, subset actions, projective-line
  groups over F5 and F7, affine groups over F2^3 and F8, the quaternion
  group, and S4 wr S2.

## Tables

- `tables/f4q2_fragment.csv` - a single aggregated bound row with
  class size 2^22 and intersection bound 2^17, for exercising imported
  bound ledgers.

## Queries

- `queries/e6_p16_index.wq` - index polynomial of the D4 Levi parabolic of
  E6 (nodes a2,a3,a4,a5 removed set: a1,a6).
- `queries/e6_a5a1.wq` - semisimple character query for the class with
  root subset {a0,a1,a3,a4,a5,a6} (type A5A1) against the same parabolic.
- `queries/a1_borel_index.wq` - Borel index of A1.

## Manifests

- `manifests/theorem1_desk.cases` - certified base-size rows plus the
  evidence-mode Co3 row.
- `manifests/counting.cases` - element-counting and ledger rows.
";
