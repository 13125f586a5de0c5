use std::io::Read;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let mut stdin = Vec::new();
    // only consume stdin when an argument asks for it
    if argv.iter().any(|a| a == "-") {
        std::io::stdin()
            .read_to_end(&mut stdin)
            .expect("read stdin");
    }
    let out = rank1::cli::run(&argv, &stdin);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.exit_code);
}
