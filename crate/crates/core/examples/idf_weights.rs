//! Token weights for a three-method class: tokens shared by every method
//! weigh least, tokens unique to one method weigh most.

use refdetect::source_model::{parse_source_set, SourceFile};
use refdetect::WeightIndex;

const CALCULATOR: &str = "\
public class Calculator {
    int sum(int x, int y) {
        return x + y;
    }

    int min(int x, int y) {
        if (x < y) return x;
        else return y;
    }

    double power(int b, int e) {
        return Math.pow(b, e);
    }
}
";

fn main() {
    let parsed = parse_source_set(&[SourceFile::new("Calculator.java", CALCULATOR)], "example");
    let methods: Vec<_> = parsed.model.methods().collect();
    let index = WeightIndex::build(methods.iter().map(|m| &m.tokens)).expect("non-empty corpus");

    println!("{:<8} {:>3} {:>7}", "token", "n_t", "idf");
    for token in ["return", "x", "y", "if", "else", "Math"] {
        println!(
            "{:<8} {:>3} {:>7.3}",
            token,
            index.doc_frequency(token),
            index.idf(token).unwrap_or(0.0)
        );
    }
    println!();
    for m in &methods {
        println!("w({}, y) = {:.3}", m.name, index.weight(&m.tokens, "y"));
    }
}
