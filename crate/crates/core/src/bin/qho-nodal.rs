fn main() {
    std::process::exit(qho_nodal::cli::main())
}
