package pay;

public class CardPayment extends Payment {
    public CardPayment(long amountCents, String token) {
        super(amountCents);
        cardToken = token;
    }

    public boolean authorize() {
        return cardToken != null && amountCents > 0;
    }
}
