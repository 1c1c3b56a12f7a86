use bdd_core::generate::gnm;
use bdd_core::{is_deletion_set, optimum_size, DegreeBound, DeletionSet, ExactConfig};
use bdd_web::{decompose_json, kernelize_json, solve_json, MAX_VERTICES};
use serde_json::Value;

fn count(doc: &Value, role: &str) -> usize {
    doc["roles"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| *r == role)
        .count()
}

fn as_usize(v: &Value) -> usize {
    v.as_u64().unwrap() as usize
}

#[test]
fn decompose_document() {
    for d in 0..4 {
        let doc = decompose_json(60, 80, 3, d).unwrap();
        assert_eq!(doc["roles"].as_array().unwrap().len(), 60);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 80);
        let stats = &doc["stats"];
        for (role, key) in [
            ("C", "c_size"),
            ("I", "i_size"),
            ("T", "t_size"),
            ("J", "j_size"),
        ] {
            assert_eq!(count(&doc, role), as_usize(&stats[key]), "d={d} {role}");
        }
        for (name, verdict) in doc["checks"].as_object().unwrap() {
            assert_eq!(verdict, "pass", "d={d} {name}");
        }
        // Every highlighted star edge runs from C into I.
        let roles = doc["roles"].as_array().unwrap();
        for e in doc["highlight"].as_array().unwrap() {
            assert_eq!(roles[as_usize(&e[0])], "C");
            assert_eq!(roles[as_usize(&e[1])], "I");
        }
        assert_eq!(
            doc["highlight"].as_array().unwrap().len(),
            (d + 1) * as_usize(&stats["c_size"])
        );
    }
}

#[test]
fn kernelize_document() {
    let doc = kernelize_json(120, 150, 9, 1).unwrap();
    let stats = &doc["stats"];
    assert_eq!(as_usize(&stats["kernel_n"]), count(&doc, "K"));
    assert_eq!(count(&doc, "C") + count(&doc, "I") + count(&doc, "K"), 120);
    assert_eq!(
        doc["rounds"].as_array().unwrap().len(),
        as_usize(&stats["rounds"])
    );
    assert_eq!(as_usize(&stats["bound_factor"]), 13);
    assert_eq!(doc, kernelize_json(120, 150, 9, 1).unwrap());
}

#[test]
fn solve_document_is_optimal() {
    for (n, m, seed, d) in [(14, 20, 1, 0), (30, 25, 2, 1), (40, 30, 5, 2), (0, 0, 0, 0)] {
        let doc = solve_json(n, m, seed, d).unwrap_or_else(|e| panic!("{n} {m} {seed} {d}: {e}"));
        let solution: DeletionSet = DeletionSet(
            doc["solution"]
                .as_array()
                .unwrap()
                .iter()
                .map(as_usize)
                .collect(),
        );
        let g = gnm(n, m, u64::from(seed)).unwrap();
        let d = DegreeBound(d);
        assert!(is_deletion_set(&g, d, &solution));
        assert_eq!(solution.len(), as_usize(&doc["stats"]["solution_size"]));
        if n <= 20 {
            assert_eq!(
                solution.len(),
                optimum_size(&g, d, ExactConfig::default()).unwrap()
            );
        }
    }
}

#[test]
fn rejected_parameters() {
    assert!(decompose_json(MAX_VERTICES + 1, 0, 0, 0).is_err());
    assert!(kernelize_json(5, 11, 0, 0).is_err());
    assert!(kernelize_json(5, 3, 0, 99).is_err());
    let err = solve_json(300, 1200, 4, 0).unwrap_err();
    assert!(err.contains("exact solver"), "{err}");
}
