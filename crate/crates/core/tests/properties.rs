use proptest::prelude::*;

use qpart::diagrams::{self, DiagramStyle};
use qpart::partitions::{self, Partition, PartitionFamily};
use qpart::series::{self, TruncatedSeries};

const ORDER: usize = 12;

fn series_strategy() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..50, ORDER + 1).prop_map(|c| TruncatedSeries::from_coeffs(ORDER, c).unwrap())
}

fn unit_strategy() -> impl Strategy<Value = TruncatedSeries> {
    (
        prop_oneof![Just(1i64), Just(-1i64)],
        prop::collection::vec(-3i64..4, ORDER),
    )
        .prop_map(|(c0, rest)| {
            let mut c = vec![c0];
            c.extend(rest);
            TruncatedSeries::from_coeffs(ORDER, c).unwrap()
        })
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..15, 0..10).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(a in series_strategy(), b in series_strategy(), c in series_strategy()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&TruncatedSeries::one(ORDER)).unwrap(), a.clone());
    }

    #[test]
    fn inverse_of_unit(u in unit_strategy()) {
        let inv = u.invert_unit().unwrap();
        prop_assert_eq!(u.mul(&inv).unwrap(), TruncatedSeries::one(ORDER));
        prop_assert_eq!(inv.invert_unit().unwrap(), u);
    }

    #[test]
    fn geometric_is_monomial_over_binomial(d in 1usize..20) {
        let via_inverse = TruncatedSeries::monomial(1, d, ORDER)
            .div_unit(&TruncatedSeries::binomial(-1, d, ORDER))
            .unwrap();
        prop_assert_eq!(TruncatedSeries::geometric(d, ORDER), via_inverse);
    }

    #[test]
    fn products_ignore_factors_beyond_the_order(extra in 0usize..30, c in -3i64..4) {
        let base = series::product_converging(|j| Ok(TruncatedSeries::binomial(c, j, ORDER)), |j| j, ORDER).unwrap();
        let mut manual = TruncatedSeries::one(ORDER);
        for j in 1..=ORDER + extra {
            manual = manual.mul(&TruncatedSeries::binomial(c, j, ORDER)).unwrap();
        }
        prop_assert_eq!(base, manual);
    }

    #[test]
    fn series_json_round_trip(a in series_strategy()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn partition_round_trips(l in partition_strategy()) {
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), l.clone());
        let csv: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
        prop_assert_eq!(csv.join(",").parse::<Partition>().unwrap(), l.clone());
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn diagram_round_trips(l in partition_strategy()) {
        if PartitionFamily::NoRepeatedOdd.contains(&l) {
            let d = diagrams::to_odd_diagram(&l).unwrap();
            prop_assert_eq!(diagrams::from_odd_diagram(&d).unwrap(), l.clone());
        }
        if PartitionFamily::NoRepeatedEven.contains(&l) {
            let d = diagrams::to_even_diagram(&l).unwrap();
            prop_assert_eq!(diagrams::from_even_diagram(&d).unwrap(), l.clone());
            prop_assert_eq!(d.style(), DiagramStyle::EvenRestricted);
        }
    }
}

#[test]
fn conjugation_exchanges_largest_part_and_length() {
    for n in 0..=25 {
        partitions::for_each(n, PartitionFamily::All, |l| {
            let c = l.conjugate();
            assert_eq!((c.largest(), c.len()), (l.len() as u32, l.largest() as usize));
            assert_eq!(c.distinct_count(), l.distinct_count());
        });
    }
}

#[test]
fn complete_partitions_conjugate_to_distinct_ones() {
    for n in 0..=20u32 {
        for k in 0..=n {
            let complete = partitions::enumerate(n, PartitionFamily::CompleteUpTo(k));
            let mut conj: Vec<Partition> = complete.iter().map(Partition::conjugate).collect();
            conj.sort_by(|a, b| b.parts().cmp(a.parts()));
            let distinct: Vec<Partition> = partitions::enumerate(n, PartitionFamily::Distinct)
                .into_iter()
                .filter(|l| l.len() == k as usize)
                .collect();
            assert_eq!(conj, distinct, "n = {}, k = {}", n, k);
        }
    }
}

#[test]
fn diagram_shapes() {
    for n in 0..=20 {
        for l in partitions::enumerate(n, PartitionFamily::NoRepeatedOdd) {
            let d = diagrams::to_odd_diagram(&l).unwrap();
            assert_eq!(d.row_count(), l.len());
            assert_eq!(d.column_count() as u32, l.largest().div_ceil(2));
            let t = diagrams::conjugate_diagram(&d).unwrap();
            assert_eq!(t.row_count(), d.column_count());
            assert_eq!(diagrams::conjugate_diagram(&t).unwrap(), d);
        }
        for l in partitions::enumerate(n, PartitionFamily::NoRepeatedEven) {
            let d = diagrams::to_even_diagram(&l).unwrap();
            assert_eq!(d.row_count(), l.len());
            assert_eq!(diagrams::from_even_diagram(&d).unwrap(), l);
        }
    }
}
