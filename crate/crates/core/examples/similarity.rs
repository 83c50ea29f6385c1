//! Symmetric and containment similarity between two method bodies.

use refdetect::source_model::{parse_source_set, SourceFile};
use refdetect::{sim, sim_u, WeightIndex};

const SOURCE: &str = "\
class Report {
    String render(java.util.List<String> lines) {
        StringBuilder sb = new StringBuilder();
        for (String line : lines) {
            sb.append(line.trim()).append('\\n');
        }
        return header + sb.toString();
    }

    String join(java.util.List<String> lines) {
        StringBuilder sb = new StringBuilder();
        for (String line : lines) {
            sb.append(line.trim()).append('\\n');
        }
        return sb.toString();
    }

    int count(java.util.List<String> lines) {
        return lines.size();
    }
}
";

fn main() {
    let parsed = parse_source_set(&[SourceFile::new("Report.java", SOURCE)], "example");
    let methods: Vec<_> = parsed.model.methods().collect();
    let index = WeightIndex::build(methods.iter().map(|m| &m.tokens)).expect("non-empty corpus");

    for a in &methods {
        for b in &methods {
            if a.name < b.name {
                let s = sim(&a.tokens, &b.tokens, &index).value();
                let ab = sim_u(&a.tokens, &b.tokens, &index).map_or(f64::NAN, |s| s.value());
                let ba = sim_u(&b.tokens, &a.tokens, &index).map_or(f64::NAN, |s| s.value());
                println!(
                    "{:<6} {:<6} sim={s:.3}  sim_u({0},{1})={ab:.3}  sim_u({1},{0})={ba:.3}",
                    a.name, b.name
                );
            }
        }
    }
}
