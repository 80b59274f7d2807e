fn main() {
    let a: Vec<String> = std::env::args().collect();
    std::process::exit(quivhom_cli::run(&a));
}
