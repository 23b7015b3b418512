use std::io::{self, BufWriter};

fn main() {
    let stdin = io::stdin();
    let mut out = BufWriter::new(io::stdout().lock());
    let code = fieldsim::cli::run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut out,
        &mut io::stderr(),
    );
    drop(out);
    std::process::exit(code);
}
