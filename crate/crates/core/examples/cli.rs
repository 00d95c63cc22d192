//! Drives the command-line front end in process.

fn main() {
    let mut out = Vec::new();
    let code = greechie::cli::run(
        ["greechie", "report", "catalog:h6_19"],
        &mut std::io::empty(),
        &mut out,
        &mut std::io::stderr(),
    );
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
}
