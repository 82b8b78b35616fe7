//! Constructors for the group families used in the small-group sweep, a
//! complete catalog of all groups of order <= 16, and Cayley-table file
//! ingestion for groups beyond it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{Group, GroupError};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cyclic group order must be >= 1")]
    BadCyclicOrder,
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("elementary abelian exponent must be >= 1")]
    BadExponent,
    #[error("dihedral order must be even and >= 4, got {0}")]
    BadDihedralOrder(usize),
    #[error("dicyclic order must be divisible by 4 and >= 8, got {0}")]
    BadDicyclicOrder(usize),
    #[error("symmetric group is built in only for 1 <= n <= 4, got {0}")]
    BadSymmetricDegree(usize),
    #[error("built-in catalog covers orders up to 16, got {0}; ingest a Cayley table instead")]
    OrderTooLarge(usize),
    #[error("constructed table failed validation: {0}")]
    Invalid(#[from] GroupError),
    #[error("malformed group document: {0}")]
    Document(String),
}

/// One catalog row: a built group under its canonical CLI name.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub group: Group,
    pub canonical_name: String,
    pub order: usize,
    pub is_cyclic: bool,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Direct product of cyclic groups of the given moduli, with tuple-shaped
/// element names. Indices are mixed-radix with the last factor fastest.
fn make_abelian(name: &str, moduli: &[usize]) -> Result<Group, CatalogError> {
    if moduli.is_empty() || moduli.iter().any(|&m| m == 0) {
        return Err(CatalogError::BadCyclicOrder);
    }
    let order: usize = moduli.iter().product();
    let k = moduli.len();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut v = vec![0; k];
        for pos in (0..k).rev() {
            v[pos] = idx % moduli[pos];
            idx /= moduli[pos];
        }
        v
    };
    let encode = |v: &[usize]| -> usize {
        v.iter().zip(moduli).fold(0, |acc, (&a, &m)| acc * m + a)
    };
    let mut table = vec![vec![0; order]; order];
    for i in 0..order {
        let vi = decode(i);
        for j in 0..order {
            let vj = decode(j);
            let sum: Vec<usize> =
                vi.iter().zip(&vj).zip(moduli).map(|((&a, &b), &m)| (a + b) % m).collect();
            table[i][j] = encode(&sum);
        }
    }
    let names: Vec<String> = (0..order)
        .map(|i| {
            let v = decode(i);
            if k == 1 {
                v[0].to_string()
            } else {
                let parts: Vec<String> = v.iter().map(|a| a.to_string()).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    Ok(Group::from_table(name, names, table)?)
}

/// The cyclic group of order n, written additively.
pub fn make_cyclic(n: usize) -> Result<Group, CatalogError> {
    make_abelian(&format!("Z{n}"), &[n])
}

/// The elementary abelian group of order p^k.
pub fn make_elementary_abelian(p: usize, k: usize) -> Result<Group, CatalogError> {
    if !is_prime(p) {
        return Err(CatalogError::NotPrime(p));
    }
    if k == 0 {
        return Err(CatalogError::BadExponent);
    }
    let name = vec![format!("Z{p}"); k].join("x");
    make_abelian(&name, &vec![p; k])
}

/// Direct product of two arbitrary groups.
pub fn make_direct_product(g: &Group, h: &Group) -> Group {
    let order = g.order() * h.order();
    let hn = h.order();
    let mut table = vec![vec![0; order]; order];
    for a1 in 0..g.order() {
        for b1 in 0..hn {
            for a2 in 0..g.order() {
                for b2 in 0..hn {
                    table[a1 * hn + b1][a2 * hn + b2] = g.mul(a1, a2) * hn + h.mul(b1, b2);
                }
            }
        }
    }
    let names: Vec<String> = (0..order)
        .map(|i| format!("({},{})", g.element_name(i / hn), h.element_name(i % hn)))
        .collect();
    Group::from_table(format!("{}x{}", g.name(), h.name()), names, table)
        .expect("direct product of valid groups is a valid group")
}

fn pow_name(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}{e}"),
    }
}

/// Group <a, b | a^m = 1, b a b^-1 = a^s, b^k = a^t> with elements a^i b^j,
/// 0 <= i < m, 0 <= j < k, indexed as j*m + i. All the dihedral, dicyclic,
/// semidihedral and modular families fall out of this one table.
fn make_metacyclic(
    name: &str,
    m: usize,
    k: usize,
    s: usize,
    t: usize,
    a_name: &str,
    b_name: &str,
) -> Result<Group, CatalogError> {
    let order = m * k;
    // s^j mod m for 0 <= j < k
    let mut spow = vec![1usize; k];
    for j in 1..k {
        spow[j] = spow[j - 1] * s % m;
    }
    let mut table = vec![vec![0; order]; order];
    for i1 in 0..m {
        for j1 in 0..k {
            for i2 in 0..m {
                for j2 in 0..k {
                    let mut i = (i1 + i2 * spow[j1]) % m;
                    let mut j = j1 + j2;
                    if j >= k {
                        i = (i + t) % m;
                        j -= k;
                    }
                    table[j1 * m + i1][j2 * m + i2] = j * m + i;
                }
            }
        }
    }
    let names: Vec<String> = (0..order)
        .map(|idx| {
            let (j, i) = (idx / m, idx % m);
            let s = format!("{}{}", pow_name(a_name, i), pow_name(b_name, j));
            if s.is_empty() {
                "e".to_string()
            } else {
                s
            }
        })
        .collect();
    Ok(Group::from_table(name, names, table)?)
}

/// Dihedral group of order 2n (argument is the group order).
pub fn make_dihedral(two_n: usize) -> Result<Group, CatalogError> {
    if two_n < 4 || two_n % 2 != 0 {
        return Err(CatalogError::BadDihedralOrder(two_n));
    }
    let n = two_n / 2;
    make_metacyclic(&format!("D{two_n}"), n, 2, n - 1, 0, "r", "s")
}

/// Dicyclic group of order 4n (argument is the group order): for 2-power
/// orders this is the generalized quaternion group, with a unique involution.
pub fn make_dicyclic(four_n: usize) -> Result<Group, CatalogError> {
    if four_n < 8 || four_n % 4 != 0 {
        return Err(CatalogError::BadDicyclicOrder(four_n));
    }
    let half = four_n / 2;
    let name = if four_n.is_power_of_two() {
        format!("Q{four_n}")
    } else {
        format!("Dic{four_n}")
    };
    make_metacyclic(&name, half, 2, half - 1, half / 2, "a", "b")
}

/// The semidihedral group QD16 = <a, b | a^8 = b^2 = 1, b a b = a^3>.
pub fn make_semidihedral_16() -> Group {
    make_metacyclic("QD16", 8, 2, 3, 0, "a", "b").expect("QD16 relations are consistent")
}

/// The modular group of order 16, <a, b | a^8 = b^2 = 1, b a b = a^5>.
pub fn make_modular_16() -> Group {
    make_metacyclic("M16", 8, 2, 5, 0, "a", "b").expect("M16 relations are consistent")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic, so the identity comes first
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x);
                rec(n, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn cycle_name(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut s = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        s.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            s.push_str(&(x + 1).to_string());
            x = perm[x];
            if x == start {
                break;
            }
        }
        s.push(')');
    }
    if s.is_empty() {
        "id".to_string()
    } else {
        s
    }
}

fn permutation_group(name: &str, perms: Vec<Vec<usize>>) -> Group {
    let order = perms.len();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
    let mut table = vec![vec![0; order]; order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // (p . q)(x) = p(q(x))
            let composed: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
            table[i][j] = index_of(&composed);
        }
    }
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    Group::from_table(name, names, table).expect("permutation composition is a group")
}

/// Symmetric group on n letters, 1 <= n <= 4.
pub fn make_symmetric(n: usize) -> Result<Group, CatalogError> {
    if !(1..=4).contains(&n) {
        return Err(CatalogError::BadSymmetricDegree(n));
    }
    Ok(permutation_group(&format!("S{n}"), permutations(n)))
}

/// Alternating group on 4 letters.
pub fn make_alternating_4() -> Group {
    let even: Vec<Vec<usize>> = permutations(4)
        .into_iter()
        .filter(|p| {
            let mut inv = 0;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            inv % 2 == 0
        })
        .collect();
    permutation_group("A4", even)
}

/// Extension of an abelian base by Z2 acting through the involutive
/// automorphism `phi` (given as an index permutation of the base).
fn make_z2_extension(name: &str, base: &Group, phi: &[usize], top_name: &str) -> Group {
    let n = base.order();
    let order = 2 * n;
    let mut table = vec![vec![0; order]; order];
    for e1 in 0..2 {
        for n1 in 0..n {
            for e2 in 0..2 {
                for n2 in 0..n {
                    let twisted = if e1 == 1 { phi[n2] } else { n2 };
                    let prod = base.mul(n1, twisted);
                    table[e1 * n + n1][e2 * n + n2] = ((e1 + e2) % 2) * n + prod;
                }
            }
        }
    }
    let names: Vec<String> = (0..order)
        .map(|idx| {
            let (e, g) = (idx / n, idx % n);
            if e == 0 {
                base.element_name(g).to_string()
            } else if g == 0 {
                top_name.to_string()
            } else {
                format!("{}{}", base.element_name(g), top_name)
            }
        })
        .collect();
    Group::from_table(name, names, table).expect("extension by an involutive automorphism")
}

/// The order-16 group (Z4 x Z2) : Z2 in which the outer involution sends
/// (x, y) to (x, y + x). It has 7 involutions and 8 elements of order 4
/// whose squares split between two central involutions.
pub fn make_z4xz2_semidirect_z2() -> Group {
    let base = make_abelian("Z4xZ2", &[4, 2]).unwrap();
    // phi(x, y) = (x, y + x mod 2); index = 2x + y
    let phi: Vec<usize> = (0..8).map(|i| (i / 2) * 2 + ((i % 2) + i / 2) % 2).collect();
    make_z2_extension("Z4xZ2rZ2", &base, &phi, "c")
}

/// The Pauli group of order 16: the central product D8 * Z4, identifying the
/// central involutions of both factors. All eight order-4 elements share the
/// same square.
pub fn make_central_product_d8_z4() -> Group {
    let d8 = make_dihedral(8).unwrap();
    let r2 = 2; // index of r^2 in make_dihedral(8)
    let order = 16;
    let mut table = vec![vec![0; order]; order];
    for z1 in 0..2 {
        for d1 in 0..8 {
            for z2 in 0..2 {
                for d2 in 0..8 {
                    let mut d = d8.mul(d1, d2);
                    let mut z = z1 + z2;
                    if z >= 2 {
                        d = d8.mul(d, r2);
                        z -= 2;
                    }
                    table[z1 * 8 + d1][z2 * 8 + d2] = z * 8 + d;
                }
            }
        }
    }
    let names: Vec<String> = (0..order)
        .map(|idx| {
            let (z, d) = (idx / 8, idx % 8);
            match (z, d) {
                (0, _) => d8.element_name(d).to_string(),
                (1, 0) => "i".to_string(),
                (1, _) => format!("{}i", d8.element_name(d)),
            }
        })
        .collect();
    Group::from_table("Pauli16", names, table).expect("central product is a group")
}

/// <a, b | a^4 = b^4 = 1, b a b^-1 = a^-1>.
pub fn make_z4_semidirect_z4() -> Group {
    make_metacyclic("Z4rZ4", 4, 4, 3, 0, "a", "b").expect("Z4:Z4 relations are consistent")
}

fn entry(group: Group) -> CatalogEntry {
    let canonical_name = group.name().to_string();
    let order = group.order();
    let is_cyclic = group.is_cyclic();
    CatalogEntry { group, canonical_name, order, is_cyclic }
}

/// All groups of order <= max_order up to isomorphism, sorted by
/// (order, canonical name). Only orders up to 16 are built in.
pub fn catalog_up_to(max_order: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    if max_order > 16 {
        return Err(CatalogError::OrderTooLarge(max_order));
    }
    let mut groups: Vec<Group> = Vec::new();
    for n in 1..=max_order.min(16) {
        groups.push(make_cyclic(n)?);
    }
    if max_order >= 4 {
        groups.push(make_elementary_abelian(2, 2)?);
    }
    if max_order >= 6 {
        groups.push(make_symmetric(3)?);
    }
    if max_order >= 8 {
        groups.push(make_abelian("Z2xZ4", &[2, 4])?);
        groups.push(make_elementary_abelian(2, 3)?);
        groups.push(make_dihedral(8)?);
        groups.push(make_dicyclic(8)?);
    }
    if max_order >= 9 {
        groups.push(make_elementary_abelian(3, 2)?);
    }
    if max_order >= 10 {
        groups.push(make_dihedral(10)?);
    }
    if max_order >= 12 {
        groups.push(make_abelian("Z2xZ6", &[2, 6])?);
        groups.push(make_alternating_4());
        groups.push(make_dihedral(12)?);
        groups.push(make_dicyclic(12)?);
    }
    if max_order >= 14 {
        groups.push(make_dihedral(14)?);
    }
    if max_order >= 16 {
        groups.push(make_abelian("Z2xZ8", &[2, 8])?);
        groups.push(make_abelian("Z4xZ4", &[4, 4])?);
        groups.push(make_abelian("Z2xZ2xZ4", &[2, 2, 4])?);
        groups.push(make_elementary_abelian(2, 4)?);
        groups.push(make_dihedral(16)?);
        groups.push(make_dicyclic(16)?);
        groups.push(make_semidihedral_16());
        groups.push(make_modular_16());
        groups.push({
            let mut g = make_direct_product(&make_cyclic(2)?, &make_dihedral(8)?);
            g.set_name("Z2xD8");
            g
        });
        groups.push({
            let mut g = make_direct_product(&make_cyclic(2)?, &make_dicyclic(8)?);
            g.set_name("Z2xQ8");
            g
        });
        groups.push(make_z4_semidirect_z4());
        groups.push(make_z4xz2_semidirect_z2());
        groups.push(make_central_product_d8_z4());
    }
    let mut entries: Vec<CatalogEntry> = groups.into_iter().map(entry).collect();
    entries.sort_by(|a, b| (a.order, a.canonical_name.clone()).cmp(&(b.order, b.canonical_name.clone())));
    Ok(entries)
}

/// Looks up a catalog group by canonical name.
pub fn find_group(name: &str) -> Option<Group> {
    catalog_up_to(16)
        .expect("built-in catalog")
        .into_iter()
        .find(|e| e.canonical_name == name)
        .map(|e| e.group)
}

/// The names accepted by `find_group`, in catalog order.
pub fn canonical_names() -> Vec<String> {
    catalog_up_to(16)
        .expect("built-in catalog")
        .into_iter()
        .map(|e| e.canonical_name)
        .collect()
}

/// On-disk form of a group: a JSON document with the multiplication table.
/// Row i, column j holds the index of element_i * element_j, and element 0
/// must be the identity.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupDocument {
    pub name: String,
    pub order: usize,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Serializes a group in the document format. `ingest_cayley_table` reads
/// the same bytes back.
pub fn export_group(group: &Group) -> String {
    let doc = GroupDocument {
        name: group.name().to_string(),
        order: group.order(),
        elements: group.element_names().to_vec(),
        table: group.table().to_vec(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("group document serializes");
    s.push('\n');
    s
}

/// Parses and fully validates a group document; rejects non-groups with the
/// first failing axiom witness.
pub fn ingest_cayley_table(document: &str) -> Result<Group, CatalogError> {
    let doc: GroupDocument =
        serde_json::from_str(document).map_err(|e| CatalogError::Document(e.to_string()))?;
    if doc.order != doc.table.len() {
        return Err(CatalogError::Document(format!(
            "declared order {} does not match table size {}",
            doc.order,
            doc.table.len()
        )));
    }
    Ok(Group::from_table(doc.name, doc.elements, doc.table)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn cyclic_and_elementary_abelian() {
        assert_eq!(make_cyclic(1).unwrap().order(), 1);
        let z2cubed = make_elementary_abelian(2, 3).unwrap();
        assert_eq!(z2cubed.count_elements_of_order(2), 7);
        assert!(make_elementary_abelian(4, 2).is_err());
        assert!(make_cyclic(0).is_err());
    }

    #[test]
    fn direct_product_census() {
        let z2z6 = make_direct_product(&make_cyclic(2).unwrap(), &make_cyclic(6).unwrap());
        assert_eq!(z2z6.order(), 12);
        assert_eq!(
            z2z6.element_order_spectrum(),
            std::collections::BTreeSet::from([1, 2, 3, 6])
        );
    }

    #[test]
    fn dihedral_families() {
        let d8 = make_dihedral(8).unwrap();
        assert_eq!(d8.count_elements_of_order(2), 5);
        let d16 = make_dihedral(16).unwrap();
        assert_eq!(d16.count_elements_of_order(2), 9);
        assert!(make_dihedral(7).is_err());
        assert!(make_dihedral(2).is_err());

        // dihedral of order 6 is S3 in disguise
        let d6 = make_dihedral(6).unwrap();
        let s3 = make_symmetric(3).unwrap();
        assert!(!d6.is_abelian());
        assert_eq!(d6.count_elements_of_order(2), s3.count_elements_of_order(2));
        assert_eq!(d6.count_elements_of_order(3), s3.count_elements_of_order(3));
    }

    #[test]
    fn dicyclic_families() {
        let q8 = make_dicyclic(8).unwrap();
        assert_eq!(q8.count_elements_of_order(2), 1);
        let q16 = make_dicyclic(16).unwrap();
        assert_eq!(q16.count_elements_of_order(2), 1);
        assert_eq!(
            q16.element_order_spectrum(),
            std::collections::BTreeSet::from([1, 2, 4, 8])
        );
        let dic12 = make_dicyclic(12).unwrap();
        assert_eq!(dic12.order(), 12);
        // a^6 = 1, b^2 = a^3, b^-1 a b = a^5
        let a = 1;
        let b = 6;
        assert_eq!(dic12.element_order(a).unwrap(), 6);
        assert_eq!(dic12.mul(b, b), 3);
        let conj = dic12.mul(dic12.mul(dic12.inverse(b), a), b);
        assert_eq!(conj, 5);
        assert!(make_dicyclic(10).is_err());
    }

    #[test]
    fn semidihedral_16_relations() {
        let qd16 = make_semidihedral_16();
        let (a, b) = (1, 8);
        assert_eq!(qd16.element_order(a).unwrap(), 8);
        assert_eq!(qd16.element_order(b).unwrap(), 2);
        // b a b = a^3
        let bab = qd16.mul(qd16.mul(b, a), b);
        let a3 = qd16.mul(qd16.mul(a, a), a);
        assert_eq!(bab, a3);
        assert_eq!(qd16.count_elements_of_order(4), 6);
        // <a> is a subgroup of order 8
        let gen = qd16
            .subgroup_generated(&crate::group::ElementSet::singleton(a))
            .unwrap();
        assert_eq!(gen.len(), 8);
        assert!(qd16.count_subgroups_of_order(8) >= 1);
    }

    #[test]
    fn modular_16_relations() {
        let m16 = make_modular_16();
        let (a, b) = (1, 8);
        let bab = m16.mul(m16.mul(b, a), b);
        let mut a5 = 0;
        for _ in 0..5 {
            a5 = m16.mul(a5, a);
        }
        assert_eq!(bab, a5);
        assert_eq!(m16.count_elements_of_order(2), 3);
    }

    #[test]
    fn symmetric_groups() {
        assert_eq!(make_symmetric(2).unwrap().order(), 2);
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.count_elements_of_order(2), 3);
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        assert!(make_symmetric(5).is_err());
        let a4 = make_alternating_4();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.count_elements_of_order(3), 8);
    }

    #[test]
    fn catalog_counts_match_classification() {
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];
        let entries = catalog_up_to(16).unwrap();
        let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
        for e in &entries {
            *per_order.entry(e.order).or_default() += 1;
        }
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(per_order.get(&(i + 1)).copied().unwrap_or(0), want, "order {}", i + 1);
        }
        assert_eq!(entries.len(), 42);
        assert_eq!(catalog_up_to(8).unwrap().len(), 14);
        assert_eq!(
            catalog_up_to(4)
                .unwrap()
                .iter()
                .map(|e| e.canonical_name.as_str())
                .collect::<Vec<_>>(),
            ["Z1", "Z2", "Z3", "Z2xZ2", "Z4"]
        );
        assert!(catalog_up_to(17).is_err());
    }

    #[test]
    fn catalog_entries_are_valid_and_consistent() {
        for e in catalog_up_to(16).unwrap() {
            e.group.validate().unwrap();
            assert_eq!(e.order, e.group.order());
            assert_eq!(e.is_cyclic, e.group.is_cyclic());
            assert_eq!(e.canonical_name, e.group.name());
        }
    }

    #[test]
    fn catalog_names_are_unique() {
        let names = canonical_names();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
    }

    /// Invariant tuple: (abelian, element-order multiset, center size).
    fn invariant_tuple(g: &Group) -> (bool, Vec<(usize, usize)>, usize) {
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        for x in g.elements() {
            *census.entry(g.element_order(x).unwrap()).or_default() += 1;
        }
        (g.is_abelian(), census.into_iter().collect(), g.center().len())
    }

    /// Order-8 subgroups with exactly one involution are quaternion; this
    /// splits the two documented tuple collisions.
    fn quaternion_subgroup_count(g: &Group) -> usize {
        g.all_subgroups()
            .iter()
            .filter(|h| h.len() == 8)
            .filter(|h| {
                h.iter().filter(|&&x| g.element_order(x).unwrap() == 2).count() == 1
            })
            .count()
    }

    #[test]
    fn catalog_entries_pairwise_distinguished() {
        // These two pairs share (abelian, spectrum, center size) and are
        // split by their quaternion-subgroup counts instead.
        let documented: [(&str, &str); 2] = [("Z2xQ8", "Z4rZ4"), ("Pauli16", "Z4xZ2rZ2")];
        let entries = catalog_up_to(16).unwrap();
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                let (a, b) = (&entries[i], &entries[j]);
                if a.order != b.order {
                    continue;
                }
                let same_tuple = invariant_tuple(&a.group) == invariant_tuple(&b.group);
                let pair_documented = documented.iter().any(|&(x, y)| {
                    (a.canonical_name == x && b.canonical_name == y)
                        || (a.canonical_name == y && b.canonical_name == x)
                });
                if pair_documented {
                    assert!(same_tuple, "{} vs {}", a.canonical_name, b.canonical_name);
                    assert_ne!(
                        quaternion_subgroup_count(&a.group),
                        quaternion_subgroup_count(&b.group),
                        "{} vs {}",
                        a.canonical_name,
                        b.canonical_name
                    );
                } else {
                    assert!(
                        !same_tuple,
                        "undocumented invariant collision: {} vs {}",
                        a.canonical_name, b.canonical_name
                    );
                }
            }
        }
    }

    #[test]
    fn generalized_quaternion_has_unique_involution() {
        for order in [8, 16] {
            let q = make_dicyclic(order).unwrap();
            assert_eq!(q.count_elements_of_order(2), 1, "Q{order}");
        }
    }

    #[test]
    fn export_ingest_round_trip() {
        let d8 = make_dihedral(8).unwrap();
        let doc = export_group(&d8);
        let back = ingest_cayley_table(&doc).unwrap();
        assert_eq!(back, d8);
        assert_eq!(export_group(&back), doc);
    }

    #[test]
    fn ingest_rejects_non_groups() {
        let valid = ingest_cayley_table(
            r#"{"name":"Z2","order":2,"elements":["e","g"],"table":[[0,1],[1,0]]}"#,
        )
        .unwrap();
        assert_eq!(valid.order(), 2);

        let broken = ingest_cayley_table(
            r#"{"name":"bad","order":3,"elements":["e","a","b"],
                "table":[[0,1,2],[1,2,0],[2,1,0]]}"#,
        );
        let msg = broken.unwrap_err().to_string();
        assert!(msg.contains("associativity") || msg.contains("inverse"), "{msg}");

        assert!(ingest_cayley_table("not json").is_err());
    }
}
