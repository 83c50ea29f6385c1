//! A calibration corpus with a known best threshold per type.
//!
//! For every refactoring type there is one "true" pair whose relationship is
//! in the oracle and one "decoy" pair holding a relationship of the same type
//! that the oracle leaves out. The decoy's similarity sits between grid
//! points, so the F1-best τ for the type is the first grid value at or above
//! it. Decoys are built so that leaving them unmatched creates no candidate
//! of any other type.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use refdetect::source_model::EntityId;
use refdetect::RelationshipType::{self, *};

use super::write_tree;

pub struct PlantedCase {
    pub kind: RelationshipType,
    pub label: String,
    pub before: EntityId,
    pub after: EntityId,
    pub in_oracle: bool,
}

struct Fixture {
    kind: RelationshipType,
    decoy: bool,
    before: Vec<(&'static str, String)>,
    after: Vec<(&'static str, String)>,
    rel: (EntityId, EntityId),
}

fn fields_class(pkg: &str, name: &str, fields: &[&str]) -> String {
    let mut s = format!("package {pkg};\n\npublic class {name} {{\n");
    for f in fields {
        let _ = writeln!(s, "    {f};");
    }
    s.push_str("}\n");
    s
}

fn ty(q: &str) -> EntityId {
    EntityId::type_id(q)
}

fn method(c: &str, n: &str, params: &[&str]) -> EntityId {
    let params: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    EntityId::method(c, n, &params)
}

fn field(c: &str, n: &str) -> EntityId {
    EntityId::field(c, n)
}

const PALETTE: &[&str] = &[
    "int red = 255",
    "int green = 128",
    "int blue = 64",
    "String name = \"sunset\"",
    "double alpha = 0.75",
    "boolean opaque = false",
];

fn type_fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            kind: MoveType,
            decoy: false,
            before: vec![("pa/Palette.java", fields_class("pa", "Palette", PALETTE))],
            after: vec![("pb/Palette.java", fields_class("pb", "Palette", PALETTE))],
            rel: (ty("pa.Palette"), ty("pb.Palette")),
        },
        Fixture {
            kind: MoveType,
            decoy: true,
            before: vec![(
                "qa/Gauge.java",
                fields_class("qa", "Gauge", &["int min = 0", "int max = 100", "String unit = \"kPa\"", "double scale = 1.5", "long samples = 9000L"]),
            )],
            after: vec![(
                "qb/Gauge.java",
                fields_class("qb", "Gauge", &["int min = 0", "int max = 100", "String unit = \"kPa\"", "double scale = 1.5", "long samples = 12000L"]),
            )],
            rel: (ty("qa.Gauge"), ty("qb.Gauge")),
        },
        Fixture {
            kind: RenameType,
            decoy: false,
            before: vec![("ra/Ticket.java", fields_class("ra", "Ticket", PALETTE))],
            after: vec![("ra/Issue.java", fields_class("ra", "Issue", PALETTE))],
            rel: (ty("ra.Ticket"), ty("ra.Issue")),
        },
        Fixture {
            kind: RenameType,
            decoy: true,
            before: vec![(
                "rb/Crate.java",
                fields_class("rb", "Crate", &["int width = 40", "int height = 30", "int depth = 20", "String label = \"fragile\"", "boolean sealed = true"]),
            )],
            after: vec![(
                "rb/Carton.java",
                fields_class("rb", "Carton", &["int width = 40", "int height = 30", "int depth = 25", "String label = \"books\"", "boolean sealed = true", "double weight = 3.5"]),
            )],
            rel: (ty("rb.Crate"), ty("rb.Carton")),
        },
        Fixture {
            kind: MoveAndRenameType,
            decoy: false,
            before: vec![("sa/Swatch.java", fields_class("sa", "Swatch", PALETTE))],
            after: vec![("sb/ColorSample.java", fields_class("sb", "ColorSample", PALETTE))],
            rel: (ty("sa.Swatch"), ty("sb.ColorSample")),
        },
        Fixture {
            kind: MoveAndRenameType,
            decoy: true,
            before: vec![(
                "ta/Timer.java",
                fields_class("ta", "Timer", &["long start = 0L", "long stop = 0L", "boolean running = false", "String name = \"lap\"", "int laps = 0"]),
            )],
            after: vec![(
                "tb/Stopwatch.java",
                fields_class("tb", "Stopwatch", &["long start = 0L", "long stop = 0L", "boolean paused = true", "String id = \"sw\"", "double drift = 0.01", "char mode = 'm'"]),
            )],
            rel: (ty("ta.Timer"), ty("tb.Stopwatch")),
        },
    ]
}

fn supertype_fixtures() -> Vec<Fixture> {
    let square = |implements: &str, extra: &str| {
        format!(
            "package es;\n\npublic class Square{implements} {{\n    private double side;\n\n    public double area() {{\n        return side * side;\n    }}\n\n    public double perimeter() {{\n        return 4 * side;\n    }}\n{extra}}}\n"
        )
    };
    let oven = |implements: &str, extra: &str| {
        format!(
            "package ed;\n\npublic class Oven{implements} {{\n    private int celsius;\n\n    public void heat(int target) {{\n        celsius = target;\n    }}\n\n    public int temperature() {{\n        return celsius;\n    }}\n{extra}}}\n"
        )
    };
    vec![
        Fixture {
            kind: ExtractSupertype,
            decoy: false,
            before: vec![("es/Square.java", square("", ""))],
            after: vec![
                ("es/Square.java", square(" implements Figure", "")),
                ("es/Figure.java", "package es;\n\npublic interface Figure {\n    double area();\n\n    double perimeter();\n}\n".into()),
            ],
            rel: (ty("es.Square"), ty("es.Figure")),
        },
        Fixture {
            kind: ExtractSupertype,
            decoy: true,
            before: vec![("ed/Oven.java", oven("", ""))],
            after: vec![
                (
                    "ed/Oven.java",
                    oven(
                        " implements Appliance",
                        "\n    public String brand() {\n        return \"acme\";\n    }\n\n    public boolean eco() {\n        return false;\n    }\n",
                    ),
                ),
                (
                    "ed/Appliance.java",
                    "package ed;\n\npublic interface Appliance {\n    void heat(int target);\n\n    String brand();\n\n    boolean eco();\n\n    long serial();\n}\n".into(),
                ),
            ],
            rel: (ty("ed.Oven"), ty("ed.Appliance")),
        },
    ]
}

fn method_fixtures() -> Vec<Fixture> {
    let body_full = "        int total = 0;\n        for (int i = 0; i < items.length; i++) {\n            total += items[i] * weight;\n        }\n        return total;\n";
    let body_half = "        int total = 0;\n        for (int i = 0; i < items.length; i++) {\n            total += items[i] * weight;\n        }\n        String note = \"checked\";\n        boolean ok = note.isEmpty() || total > limit;\n        long stamp = System.nanoTime();\n        return ok ? total : -1;\n";
    let body_near = "        int total = 0;\n        for (int i = 0; i < items.length; i++) {\n            total += items[i] * weight;\n        }\n        limit = Math.max(limit, total);\n        return total;\n";
    let body_heavy = "        int total = 0;\n        for (int i = 0; i < items.length; i++) {\n            total += items[i] * weight;\n        }\n        String note = \"checked\";\n        boolean ok = note.isEmpty() || total > limit;\n        long stamp = System.nanoTime();\n        StringBuilder log = new StringBuilder(note);\n        log.append(stamp).append(':').append(ok);\n        System.out.println(log);\n        return ok ? total : -1;\n";
    let body_close = "        int total = 0;\n        for (int i = 0; i < items.length; i++) {\n            total += items[i] * weight;\n        }\n        return total / 2;\n";
    let holder = |pkg: &str, name: &str, sup: &str, methods: &[(&str, &str)]| {
        let mut s = format!("package {pkg};\n\npublic class {name}{sup} {{\n    protected int[] items;\n    protected int weight;\n    protected int limit;\n");
        for (sig, body) in methods {
            let _ = write!(s, "\n    public int {sig} {{\n{body}    }}\n");
        }
        s.push_str("}\n");
        s
    };
    let keep = ("size()", "        return items.length;\n");
    let mut out = Vec::new();

    // RenameMethod
    for (decoy, body) in [(false, body_full), (true, body_half)] {
        let pkg = if decoy { "rmd" } else { "rmt" };
        out.push(Fixture {
            kind: RenameMethod,
            decoy,
            before: vec![("Box.java", holder(pkg, "Box", "", &[keep, ("sum()", body_full)]))],
            after: vec![("Box.java", holder(pkg, "Box", "", &[keep, ("weightedTotal()", body)]))],
            rel: (method(&format!("{pkg}.Box"), "sum", &[]), method(&format!("{pkg}.Box"), "weightedTotal", &[])),
        });
    }
    // MoveMethod
    for (decoy, body) in [(false, body_full), (true, body_near)] {
        let pkg = if decoy { "mmd" } else { "mmt" };
        out.push(Fixture {
            kind: MoveMethod,
            decoy,
            before: vec![
                ("Source.java", holder(pkg, "Source", "", &[keep, ("sum()", body_full)])),
                ("Target.java", holder(pkg, "Target", "", &[keep])),
            ],
            after: vec![
                ("Source.java", holder(pkg, "Source", "", &[keep])),
                ("Target.java", holder(pkg, "Target", "", &[keep, ("sum()", body)])),
            ],
            rel: (method(&format!("{pkg}.Source"), "sum", &[]), method(&format!("{pkg}.Target"), "sum", &[])),
        });
    }
    // PullUpMethod
    for (decoy, body) in [(false, body_full), (true, body_heavy)] {
        let pkg = if decoy { "pud" } else { "put" };
        out.push(Fixture {
            kind: PullUpMethod,
            decoy,
            before: vec![
                ("Base.java", holder(pkg, "Base", "", &[keep])),
                ("Child.java", holder(pkg, "Child", " extends Base", &[("sum()", body_full)])),
            ],
            after: vec![
                ("Base.java", holder(pkg, "Base", "", &[keep, ("sum()", body)])),
                ("Child.java", holder(pkg, "Child", " extends Base", &[])),
            ],
            rel: (method(&format!("{pkg}.Child"), "sum", &[]), method(&format!("{pkg}.Base"), "sum", &[])),
        });
    }
    // PushDownMethod
    for (decoy, body) in [(false, body_full), (true, body_close)] {
        let pkg = if decoy { "pdd" } else { "pdt" };
        out.push(Fixture {
            kind: PushDownMethod,
            decoy,
            before: vec![
                ("Base.java", holder(pkg, "Base", "", &[keep, ("sum()", body_full)])),
                ("Child.java", holder(pkg, "Child", " extends Base", &[])),
            ],
            after: vec![
                ("Base.java", holder(pkg, "Base", "", &[keep])),
                ("Child.java", holder(pkg, "Child", " extends Base", &[("sum()", body)])),
            ],
            rel: (method(&format!("{pkg}.Base"), "sum", &[]), method(&format!("{pkg}.Child"), "sum", &[])),
        });
    }
    out
}

fn extract_inline_fixtures() -> Vec<Fixture> {
    let report_inline = "        StringBuilder sb = new StringBuilder();\n        for (String line : lines) {\n            sb.append(line.trim()).append('\\n');\n        }\n        String text = sb.toString();\n        return header + text;\n";
    let report_call = "        String text = joinLines(lines);\n        return header + text;\n";
    let helper_exact = "        StringBuilder sb = new StringBuilder();\n        for (String line : lines) {\n            sb.append(line.trim()).append('\\n');\n        }\n        return sb.toString();\n";
    let helper_mixed = "        StringBuilder sb = new StringBuilder();\n        int count = lines.size();\n        if (count > 50) {\n            throw new IllegalStateException(\"too many: \" + count);\n        }\n        sb.append(count).append(\" lines\");\n        return sb.toString();\n";
    let helper_partial = "        StringBuilder sb = new StringBuilder();\n        for (String line : lines) {\n            sb.append(line.strip()).append(' ');\n        }\n        sb.setLength(Math.max(0, sb.length() - 1));\n        return sb.toString();\n";
    let class = |pkg: &str, report: &str, helper: Option<&str>| {
        let mut s = format!(
            "package {pkg};\n\nimport java.util.List;\n\npublic class Printer {{\n    private String header = \"# \";\n\n    public String report(List<String> lines) {{\n{report}    }}\n"
        );
        if let Some(h) = helper {
            let _ = write!(s, "\n    String joinLines(List<String> lines) {{\n{h}    }}\n");
        }
        s.push_str("}\n");
        s
    };
    let mut out = Vec::new();
    for (decoy, helper) in [(false, helper_exact), (true, helper_mixed)] {
        let pkg = if decoy { "exd" } else { "ext" };
        let q = format!("{pkg}.Printer");
        out.push(Fixture {
            kind: ExtractMethod,
            decoy,
            before: vec![("Printer.java", class(pkg, report_inline, None))],
            after: vec![("Printer.java", class(pkg, report_call, Some(helper)))],
            rel: (method(&q, "report", &["List"]), method(&q, "joinLines", &["List"])),
        });
    }
    for (decoy, helper) in [(false, helper_exact), (true, helper_partial)] {
        let pkg = if decoy { "ind" } else { "int_" };
        let q = format!("{pkg}.Printer");
        out.push(Fixture {
            kind: InlineMethod,
            decoy,
            before: vec![("Printer.java", class(pkg, report_call, Some(helper)))],
            after: vec![("Printer.java", class(pkg, report_inline, None))],
            rel: (method(&q, "joinLines", &["List"]), method(&q, "report", &["List"])),
        });
    }
    out
}

fn field_fixtures() -> Vec<Fixture> {
    let uses_full = "    public void tick() {\n        counter = counter + step;\n    }\n\n    public boolean done() {\n        return counter >= 1000;\n    }\n";
    let uses_half = "    public void tick() {\n        counter = counter + step;\n    }\n\n    public boolean done() {\n        String msg = \"remaining \" + (limit - counter) * 2;\n        return msg.length() > 12 && ready;\n    }\n";
    let uses_close = "    public void tick() {\n        counter = counter + step;\n    }\n\n    public boolean done() {\n        return counter >= limit * 100;\n    }\n";
    let uses_heavy = "    public void tick() {\n        counter = counter + step;\n    }\n\n    public boolean done() {\n        String msg = \"remaining \" + (limit - counter) * 2;\n        StringBuilder out = new StringBuilder(msg);\n        out.append(\" at \").append(System.currentTimeMillis());\n        return msg.length() > 12 && ready && out.length() < 80;\n    }\n";
    let class = |pkg: &str, name: &str, sup: &str, with_field: bool, body: &str| {
        let decl = if with_field { "    protected int counter;\n" } else { "" };
        format!("package {pkg};\n\npublic class {name}{sup} {{\n{decl}    protected int step = 1;\n    protected int limit = 10;\n    protected boolean ready;\n\n{body}}}\n")
    };
    let mut out = Vec::new();
    for (decoy, uses) in [(false, uses_full), (true, uses_half)] {
        let pkg = if decoy { "pufd" } else { "puft" };
        out.push(Fixture {
            kind: PullUpField,
            decoy,
            before: vec![
                ("Base.java", class(pkg, "Base", "", false, "")),
                ("Child.java", class(pkg, "Child", " extends Base", true, uses_full)),
            ],
            after: vec![
                ("Base.java", class(pkg, "Base", "", true, "")),
                ("Child.java", class(pkg, "Child", " extends Base", false, uses)),
            ],
            rel: (field(&format!("{pkg}.Child"), "counter"), field(&format!("{pkg}.Base"), "counter")),
        });
    }
    for (decoy, uses) in [(false, uses_full), (true, uses_close)] {
        let pkg = if decoy { "pdfd" } else { "pdft" };
        out.push(Fixture {
            kind: PushDownField,
            decoy,
            before: vec![
                ("Base.java", class(pkg, "Base", "", true, "")),
                ("Child.java", class(pkg, "Child", " extends Base", false, uses_full)),
            ],
            after: vec![
                ("Base.java", class(pkg, "Base", "", false, "")),
                ("Child.java", class(pkg, "Child", " extends Base", true, uses)),
            ],
            rel: (field(&format!("{pkg}.Base"), "counter"), field(&format!("{pkg}.Child"), "counter")),
        });
    }
    // Move Field: the accessors change name as they move, so no method
    // relationship appears alongside.
    let rename = |body: &str| body.replace("tick()", "advance()").replace("done()", "finished()");
    for (decoy, uses) in [(false, uses_full), (true, uses_heavy)] {
        let pkg = if decoy { "mfd" } else { "mft" };
        out.push(Fixture {
            kind: MoveField,
            decoy,
            before: vec![
                ("Origin.java", class(pkg, "Origin", "", true, uses_full)),
                ("Dest.java", class(pkg, "Dest", "", false, "")),
            ],
            after: vec![
                ("Origin.java", class(pkg, "Origin", "", false, "")),
                ("Dest.java", class(pkg, "Dest", "", true, &rename(uses))),
            ],
            rel: (field(&format!("{pkg}.Origin"), "counter"), field(&format!("{pkg}.Dest"), "counter")),
        });
    }
    out
}

/// Writes the corpus and its manifest under `root`.
pub fn build(root: &Path) -> Vec<PlantedCase> {
    let mut fixtures = type_fixtures();
    fixtures.extend(supertype_fixtures());
    fixtures.extend(method_fixtures());
    fixtures.extend(extract_inline_fixtures());
    fixtures.extend(field_fixtures());

    let mut manifest = String::new();
    let mut cases = Vec::new();
    for f in fixtures {
        let label = format!("{}-{}", f.kind.name(), if f.decoy { "decoy" } else { "true" });
        let dir = root.join(&label);
        for (side, files) in [("before", &f.before), ("after", &f.after)] {
            let files: Vec<(&str, &str)> = files.iter().map(|(p, t)| (*p, t.as_str())).collect();
            write_tree(&dir.join(side), &files);
        }
        let mut oracle = String::from("type,before,after\n");
        if !f.decoy {
            let _ = writeln!(oracle, "{},\"{}\",\"{}\"", f.kind, f.rel.0.descriptor(), f.rel.1.descriptor());
        }
        fs::write(dir.join("oracle.csv"), oracle).unwrap();
        let _ = write!(
            manifest,
            "[[pair]]\nlabel = \"{label}\"\nbefore = \"{label}/before\"\nafter = \"{label}/after\"\noracle = \"{label}/oracle.csv\"\n\n"
        );
        cases.push(PlantedCase {
            kind: f.kind,
            label,
            before: f.rel.0,
            after: f.rel.1,
            in_oracle: !f.decoy,
        });
    }
    fs::write(root.join("manifest.toml"), manifest).unwrap();
    cases
}
