package pay;

public abstract class Payment {
    protected final long amountCents;

    protected Payment(long amountCents) {
        this.amountCents = amountCents;
    }

    public abstract boolean authorize();
}
